// SPDX-License-Identifier: Apache-2.0

#include "treedoc/metrics/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "treedoc/error.hpp"
#include "treedoc/latex/importer.hpp"
#include "treedoc/serializer/sexp.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace treedoc::metrics {

namespace {

struct ClassForms {
  std::set<std::string> tex;
  std::set<std::string> tmu;
  std::set<std::string> sexp;
};

MultiplicityReport summarize(const std::map<std::string, ClassForms>& classes,
                             std::set<std::string> ClassForms::*forms) {
  MultiplicityReport r;
  r.classes = classes.size();
  std::size_t sum = 0;
  for (const auto& [key, c] : classes) {
    const std::size_t n = (c.*forms).size();
    sum += n;
    r.max_forms = std::max(r.max_forms, n);
  }
  if (r.classes > 0) r.mean_forms_per_class = static_cast<double>(sum) / static_cast<double>(r.classes);
  return r;
}

}  // namespace

MultiplicityReports class_multiplicity(const std::vector<corpus::CorpusRecord>& records) {
  std::map<std::string, ClassForms> classes;
  for (const auto& r : records) {
    auto& c = classes[r.canonical_sexp];
    c.tmu.insert(r.tmu);
    c.sexp.insert(r.canonical_sexp);
    for (const auto& v : r.latex_variants) {
      c.tex.insert(v);
      auto imported = latex::import_formula(v);
      if (!imported.diagnostics.empty()) {
        throw Error("record " + r.id + ": variant does not import cleanly: " + to_display(imported.diagnostics.front()));
      }
      const Node tree = make_node("math", {imported.tree});
      c.tmu.insert(write_tmu_node(tree));
      c.sexp.insert(write_sexp(tree));
    }
  }
  return MultiplicityReports{summarize(classes, &ClassForms::tex), summarize(classes, &ClassForms::tmu),
                             summarize(classes, &ClassForms::sexp)};
}

MultiplicityReports class_multiplicity(std::string_view jsonl) {
  return class_multiplicity(corpus::read_jsonl(jsonl));
}

}  // namespace treedoc::metrics
