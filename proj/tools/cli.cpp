// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treedoc/bench/bench.hpp"
#include "treedoc/corpus/document_gen.hpp"
#include "treedoc/corpus/records.hpp"
#include "treedoc/error.hpp"
#include "treedoc/latex/canonicalize.hpp"
#include "treedoc/latex/exporter.hpp"
#include "treedoc/latex/importer.hpp"
#include "treedoc/latex/merge.hpp"
#include "treedoc/metrics/entropy.hpp"
#include "treedoc/metrics/multiplicity.hpp"
#include "treedoc/metrics/scoring.hpp"
#include "treedoc/resolver/resolver.hpp"
#include "treedoc/serializer/sexp.hpp"
#include "treedoc/serializer/tmu.hpp"

namespace treedoc::cli {

namespace {

// Input or output problems that make the invocation itself invalid.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool json = false;
};

std::string read_input(const std::string& path, Io& io) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(io.in), {});
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_output(const std::string& path, const std::string& text, Io& io) {
  if (path == "-") {
    io.out << text;
    io.out.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

void report(const std::vector<Diagnostic>& diags, Io& io) {
  for (const auto& d : diags) io.err << (io.json ? to_json_line(d) : to_display(d)) << "\n";
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

latex::MacroTable load_style(const std::string& path, Io& io) {
  if (path.empty()) return {};
  try {
    return latex::MacroTable::from_json(read_input(path, io), path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

enum class Syntax { kLatex, kSexp, kTmu };

Syntax detect(const std::string& text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p == std::string::npos) return Syntax::kLatex;
  if (text[p] == '(') return Syntax::kSexp;
  if (text[p] == '<') return Syntax::kTmu;
  return Syntax::kLatex;
}

struct Loaded {
  Document doc;
  std::vector<Diagnostic> diagnostics;
};

// Reads LaTeX, sexp or tmu by content. Malformed serialized input is a
// usage error; LaTeX faults are diagnostics.
Loaded load(const std::string& path, const latex::MacroTable& style, Io& io) {
  const std::string text = read_input(path, io);
  try {
    switch (detect(text)) {
      case Syntax::kSexp: return {read_sexp_document(text), {}};
      case Syntax::kTmu: return {read_tmu(text), {}};
      case Syntax::kLatex: {
        auto r = latex::import_latex(text, style);
        return {std::move(r.document), std::move(r.diagnostics)};
      }
    }
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  return {};
}

LayoutParams layout_of(int lines_per_page) {
  LayoutParams l;
  l.lines_per_page = lines_per_page;
  return l;
}

// Writes `doc` as sexp, tmu (with a freshly resolved associate table) or
// LaTeX.
std::string render(Document doc, const std::string& to, const LayoutParams& layout,
                   const latex::MacroTable* style) {
  if (to == "sexp") return with_newline(write_sexp_document(doc));
  if (to == "tmu") {
    doc.aux() = resolve_full(doc, layout).table;
    return with_newline(write_tmu(doc));
  }
  return style ? latex::export_latex(doc, *style) : latex::export_latex(doc);
}

int status(bool faults) { return faults ? kFaults : kOk; }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Structured document kernel: LaTeX import/export, serializers, references, corpus and metrics"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // Shared option values.
  std::string input = "-";
  std::string output = "-";
  std::string style_path;
  std::uint64_t seed = 0;
  int trials = 3;
  int order = 2;
  int lines_per_page = 40;
  std::string to = "sexp";
  app.add_flag("--json", io.json, "Write diagnostics to stderr as JSON lines");

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input) sub->add_option("input", input, "Input file, - for stdin")->capture_default_str();
    sub->add_option("-o,--output", output, "Output file, - for stdout")->capture_default_str();
    sub->add_flag("--json", io.json, "Write diagnostics to stderr as JSON lines");
  };
  auto add_style = [&](CLI::App* sub) {
    sub->add_option("--style", style_path, "Macro/environment table (JSON)")->check(CLI::ExistingFile);
  };
  auto add_layout = [&](CLI::App* sub) {
    sub->add_option("--lines-per-page", lines_per_page, "Lines per page for page numbers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_to = [&](CLI::App* sub) {
    sub->add_option("--to", to, "Output syntax")->check(CLI::IsMember({"sexp", "tmu", "tex"}))->capture_default_str();
  };

  // import
  auto* import_cmd = app.add_subcommand("import", "Import LaTeX into a canonical tree");
  std::string import_sexp, import_tmu;
  import_cmd->add_option("input", input, "LaTeX file, - for stdin")->capture_default_str();
  import_cmd->add_option("--sexp", import_sexp, "Write the tree as an S-expression");
  import_cmd->add_option("--tmu", import_tmu, "Write the tree as tmu markup");
  import_cmd->add_flag("--json", io.json, "Write diagnostics to stderr as JSON lines");
  add_style(import_cmd);
  add_layout(import_cmd);

  auto* export_cmd = app.add_subcommand("export", "Write a tree (sexp, tmu or LaTeX) as LaTeX");
  add_common(export_cmd);
  add_style(export_cmd);

  auto* canon_cmd = app.add_subcommand("canon", "Canonicalize a tree");
  add_common(canon_cmd);
  add_style(canon_cmd);
  add_to(canon_cmd);
  add_layout(canon_cmd);

  auto* sexp_cmd = app.add_subcommand("sexp", "Convert to S-expression form");
  add_common(sexp_cmd);
  add_style(sexp_cmd);

  auto* tmu_cmd = app.add_subcommand("tmu", "Convert to tmu markup with an associate table");
  add_common(tmu_cmd);
  add_style(tmu_cmd);
  add_layout(tmu_cmd);

  auto* resolve_cmd = app.add_subcommand("resolve", "Resolve cross-references and print the label table");
  add_common(resolve_cmd);
  add_style(resolve_cmd);
  add_layout(resolve_cmd);

  auto* edit_cmd = app.add_subcommand("edit", "Apply one structural edit");
  std::string edit_replace, edit_insert, edit_delete, edit_node;
  add_common(edit_cmd);
  add_style(edit_cmd);
  add_to(edit_cmd);
  add_layout(edit_cmd);
  auto* o_replace = edit_cmd->add_option("--replace", edit_replace, "Path to replace, e.g. 0.2.1");
  auto* o_insert = edit_cmd->add_option("--insert", edit_insert, "Path of the slot to insert at");
  auto* o_delete = edit_cmd->add_option("--delete", edit_delete, "Path to delete");
  o_replace->excludes(o_insert)->excludes(o_delete);
  o_insert->excludes(o_delete);
  edit_cmd->add_option("--node", edit_node, "New subtree as an S-expression");

  auto* merge_cmd = app.add_subcommand("merge", "Merge a follower document into a lead document");
  std::string merge_follower;
  merge_cmd->add_option("lead", input, "Lead LaTeX document")->required();
  merge_cmd->add_option("follower", merge_follower, "Follower LaTeX document")->required();
  merge_cmd->add_option("-o,--output", output, "Output file, - for stdout")->capture_default_str();
  merge_cmd->add_flag("--json", io.json, "Write diagnostics to stderr as JSON lines");
  add_style(merge_cmd);
  add_layout(merge_cmd);

  auto* lint_cmd = app.add_subcommand("lint", "Diagnose a LaTeX document; the recovered tree is still written");
  add_common(lint_cmd);
  add_style(lint_cmd);
  add_layout(lint_cmd);

  auto* corpus_cmd = app.add_subcommand("corpus", "Generate the formula corpus as JSON lines");
  int corpus_count = 1000;
  int corpus_depth = 6;
  bool corpus_split = false;
  add_common(corpus_cmd, false);
  corpus_cmd->add_option("--seed", seed, "Generator seed")->capture_default_str();
  corpus_cmd->add_option("--count", corpus_count, "Number of formulas")->check(CLI::NonNegativeNumber)->capture_default_str();
  corpus_cmd->add_option("--max-depth", corpus_depth, "Maximum tree depth")->check(CLI::PositiveNumber)->capture_default_str();
  corpus_cmd->add_flag("--split", corpus_split, "Add the 50% tmu token split to every record");

  auto* entropy_cmd = app.add_subcommand("entropy", "Token entropy of a corpus (CSV, or JSON lines with --json)");
  std::string entropy_format = "all";
  bool entropy_multiplicity = false;
  add_common(entropy_cmd);
  entropy_cmd->add_option("--order", order, "n-gram order")->check(CLI::IsMember({1, 2}))->capture_default_str();
  entropy_cmd->add_option("--format", entropy_format, "tex, tmu, sexp or all")
      ->check(CLI::IsMember({"tex", "tmu", "sexp", "all"}))
      ->capture_default_str();
  entropy_cmd->add_flag("--multiplicity", entropy_multiplicity, "Report forms per equivalence class instead");

  auto* score_cmd = app.add_subcommand("score", "Score one benchmark answer");
  std::string score_kind = "item";
  std::string score_try = "1";
  bool score_correct = false;
  std::int64_t score_tokens = 0;
  int score_ref = 0;
  int score_sty = 0;
  score_cmd->add_option("--kind", score_kind, "item or merge")->check(CLI::IsMember({"item", "merge"}))->capture_default_str();
  score_cmd->add_flag("--correct", score_correct, "The answer is right (item scoring)");
  score_cmd->add_option("--tokens", score_tokens, "Token usage T")->check(CLI::NonNegativeNumber)->required();
  score_cmd->add_option("--try", score_try, "1, 2 or fail (merge scoring)")
      ->check(CLI::IsMember({"1", "2", "fail"}))
      ->capture_default_str();
  score_cmd->add_option("--ref-errors", score_ref, "Reference failures E_ref")->check(CLI::NonNegativeNumber);
  score_cmd->add_option("--style-errors", score_sty, "Style violations E_sty")->check(CLI::NonNegativeNumber);

  auto* bench_cmd = app.add_subcommand("bench", "Full and incremental resolution benchmark (CSV)");
  std::string bench_input;
  int bench_sections = 100;
  int bench_refs = 2;
  int bench_steps = 5;
  bool bench_parallel = false;
  bench_cmd->add_option("input", bench_input, "Document to measure; a synthetic one when omitted");
  bench_cmd->add_option("-o,--output", output, "CSV output, - for stdout")->capture_default_str();
  bench_cmd->add_flag("--json", io.json, "Write diagnostics to stderr as JSON lines");
  bench_cmd->add_option("--seed", seed, "Seed for the synthetic document and edit script")->capture_default_str();
  bench_cmd->add_option("--sections", bench_sections, "Sections of the synthetic document")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--refs", bench_refs, "References per section")->check(CLI::NonNegativeNumber)->capture_default_str();
  bench_cmd->add_option("--steps", bench_steps, "Random edit steps")->check(CLI::NonNegativeNumber)->capture_default_str();
  bench_cmd->add_option("--trials", trials, "Measured trials")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_flag("--parallel", bench_parallel, "Use the parallel resolve path");
  add_style(bench_cmd);
  add_layout(bench_cmd);

  std::vector<std::string> argv_store{"treedoc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const latex::MacroTable style = load_style(style_path, io);
    const latex::MacroTable* style_ptr = style_path.empty() ? nullptr : &style;
    const LayoutParams layout = layout_of(lines_per_page);

    if (import_cmd->parsed()) {
      auto r = latex::import_latex(read_input(input, io), style);
      if (import_sexp.empty() && import_tmu.empty()) import_sexp = "-";
      if (!import_sexp.empty()) write_output(import_sexp, with_newline(write_sexp_document(r.document)), io);
      if (!import_tmu.empty()) write_output(import_tmu, render(r.document, "tmu", layout, nullptr), io);
      report(r.diagnostics, io);
      return status(!r.diagnostics.empty());
    }
    if (export_cmd->parsed() || sexp_cmd->parsed() || canon_cmd->parsed()) {
      auto loaded = load(input, style, io);
      std::string target = export_cmd->parsed() ? "tex" : sexp_cmd->parsed() ? "sexp" : to;
      Document doc = canon_cmd->parsed() ? latex::canonicalize(loaded.doc) : loaded.doc;
      try {
        write_output(output, render(doc, target, layout, style_ptr), io);
      } catch (const ExportError& e) {
        report(loaded.diagnostics, io);
        err << "export error: " << e.what() << "\n";
        return kFaults;
      }
      report(loaded.diagnostics, io);
      return status(!loaded.diagnostics.empty());
    }
    if (tmu_cmd->parsed()) {
      auto loaded = load(input, style, io);
      write_output(output, render(loaded.doc, "tmu", layout, nullptr), io);
      report(loaded.diagnostics, io);
      return status(!loaded.diagnostics.empty());
    }
    if (resolve_cmd->parsed() || lint_cmd->parsed()) {
      auto loaded = load(input, style, io);
      const ResolveResult r = resolve_full(loaded.doc, layout);
      std::vector<Diagnostic> diags = loaded.diagnostics;
      diags.insert(diags.end(), r.diagnostics.begin(), r.diagnostics.end());
      if (resolve_cmd->parsed()) {
        write_output(output, with_newline(aux_to_json(r.table)), io);
      } else {
        write_output(output, with_newline(write_sexp_document(loaded.doc)), io);
      }
      report(diags, io);
      return status(!diags.empty());
    }
    if (edit_cmd->parsed()) {
      auto loaded = load(input, style, io);
      EditRecord edit;
      try {
        const Node& root = loaded.doc.root();
        if (!edit_replace.empty() || !edit_insert.empty()) {
          if (edit_node.empty()) throw UsageError("--node is required for --replace and --insert");
          const Node node = read_sexp(edit_node);
          edit = edit_replace.empty() ? EditRecord::insert(Path::parse(edit_insert), node)
                                      : EditRecord::replace(Path::parse(edit_replace),
                                                            subtree_at(root, Path::parse(edit_replace)), node);
        } else if (!edit_delete.empty()) {
          const Path p = Path::parse(edit_delete);
          edit = EditRecord::remove(p, subtree_at(root, p));
        } else {
          throw UsageError("one of --replace, --insert or --delete is required");
        }
        const AuxTable before = resolve_full(loaded.doc, layout).table;
        Document edited = apply_edit(loaded.doc, edit);
        const ResolveResult r = resolve_incremental(edited, before, edit, layout);
        edited.aux() = r.table;
        const std::string text = to == "tmu" ? with_newline(write_tmu(edited)) : render(edited, to, layout, style_ptr);
        write_output(output, text, io);
        std::vector<Diagnostic> diags = loaded.diagnostics;
        diags.insert(diags.end(), r.diagnostics.begin(), r.diagnostics.end());
        report(diags, io);
        return status(!diags.empty());
      } catch (const ParseError& e) {
        throw UsageError(std::string("--node: ") + e.what());
      } catch (const Error& e) {
        // Bad paths, stale targets and arity violations all come from the flags.
        throw UsageError(e.what());
      }
    }
    if (merge_cmd->parsed()) {
      auto lead = latex::import_latex(read_input(input, io), style);
      auto follower = latex::import_latex(read_input(merge_follower, io), style);
      auto merged = latex::merge_documents(lead.document, follower.document);
      std::vector<Diagnostic> diags = lead.diagnostics;
      diags.insert(diags.end(), follower.diagnostics.begin(), follower.diagnostics.end());
      diags.insert(diags.end(), merged.diagnostics.begin(), merged.diagnostics.end());
      try {
        write_output(output, render(merged.document, "tex", layout, style_ptr), io);
      } catch (const ExportError& e) {
        report(diags, io);
        err << "export error: " << e.what() << "\n";
        return kFaults;
      }
      report(diags, io);
      return status(!diags.empty());
    }
    if (corpus_cmd->parsed()) {
      corpus::GenParams p;
      p.seed = seed;
      p.count = corpus_count;
      p.max_depth = corpus_depth;
      write_output(output, corpus::write_jsonl(corpus::gen_corpus(p, corpus_split)), io);
      return kOk;
    }
    if (entropy_cmd->parsed()) {
      std::vector<corpus::CorpusRecord> records;
      try {
        records = corpus::read_jsonl(read_input(input, io));
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      if (entropy_multiplicity) {
        const auto m = metrics::class_multiplicity(records);
        nlohmann::ordered_json j;
        for (const auto& [name, r] : {std::pair{"tex", m.tex}, std::pair{"tmu", m.tmu}, std::pair{"sexp", m.sexp}}) {
          j[name] = {{"classes", r.classes}, {"mean_forms_per_class", r.mean_forms_per_class}, {"max_forms", r.max_forms}};
        }
        write_output(output, j.dump() + "\n", io);
        return kOk;
      }
      std::vector<metrics::EntropyReport> reports;
      for (auto f : {metrics::Format::kTex, metrics::Format::kTmu, metrics::Format::kSexp}) {
        if (entropy_format != "all" && entropy_format != metrics::to_string(f)) continue;
        reports.push_back(metrics::token_entropy(metrics::corpus_streams(records, f), order, f));
      }
      std::string text;
      if (io.json) {
        for (const auto& r : reports) text += metrics::to_json(r) + "\n";
      } else {
        text = metrics::to_csv(reports);
      }
      write_output(output, text, io);
      return kOk;
    }
    if (score_cmd->parsed()) {
      metrics::ScoreInput s;
      s.tokens = score_tokens;
      s.correct = score_correct;
      s.try_index = *metrics::parse_try_index(score_try);
      s.ref_errors = score_ref;
      s.style_errors = score_sty;
      out << (score_kind == "item" ? metrics::score_item(s) : metrics::score_merge(s)) << "\n";
      return kOk;
    }
    if (bench_cmd->parsed()) {
      Document doc;
      std::string id;
      if (bench_input.empty()) {
        corpus::GenParams p;
        p.seed = seed;
        doc = corpus::gen_document(p, bench_sections, bench_refs);
        id = "synthetic-" + std::to_string(bench_sections) + "-" + std::to_string(seed);
      } else {
        auto loaded = load(bench_input, style, io);
        report(loaded.diagnostics, io);
        doc = std::move(loaded.doc);
        id = bench_input;
      }
      bench::BenchOptions options;
      options.layout = layout;
      options.parallel = bench_parallel;
      std::vector<bench::BenchReport> reports{bench::run_full(doc, trials, options, id)};
      try {
        auto steps = bench::run_incremental(doc, bench::gen_edit_script(seed, bench_steps), trials, options, id);
        reports.insert(reports.end(), steps.begin(), steps.end());
      } catch (const Error& e) {
        write_output(output, bench::to_csv(reports), io);
        err << "bench: " << e.what() << "\n";
        return kFaults;
      }
      write_output(output, bench::to_csv(reports), io);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFaults;
  }
  return kUsage;
}

}  // namespace treedoc::cli
