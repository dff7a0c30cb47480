// Command-line front end: encode and decode expressions, evaluate the
// predicate family on integers, check and search for proofs, run the
// diagonal construction, and produce the claim-lab report.

#include "palab/diagonal.hpp"
#include "palab/lemma_lab.hpp"
#include "palab/predicates.hpp"
#include "palab/proof.hpp"
#include "palab/search.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace palab;

struct CommonOpts {
  std::string mode = "pa";
  std::string table_file;
  std::uint64_t bits = 4096;
};

SymbolTable resolve_table(const CommonOpts& o) {
  if (!o.table_file.empty()) return SymbolTable::load_file(o.table_file);
  if (o.mode == "toy") return SymbolTable::toy();
  return SymbolTable::pa_default();
}

TheoryMode resolve_mode(const CommonOpts& o) {
  auto m = theory_mode_of(o.mode);
  if (!m) throw CLI::ValidationError("--mode must be pa, pf, or toy");
  return *m;
}

// A bit-count estimate can itself overflow a double (a proof code's first
// exponent is already an astronomical value); describe it rather than cast.
std::string approx_desc(double approx_bits) {
  if (std::isfinite(approx_bits) && approx_bits < 1e15) {
    return "~2^" + std::to_string(static_cast<std::uint64_t>(approx_bits));
  }
  return "beyond estimation";
}

void print_code(const CodePtr& code, std::uint64_t bits) {
  std::cout << "factored: " << factored(code) << "\n";
  Materialized m = materialize(code, bits);
  if (!m.overflow()) {
    std::cout << "value: " << *m.value << "\n";
    std::cout << "bits: " << bit_length(*m.value) << "\n";
  } else {
    std::cout << "value: (exceeds " << bits << " bits; "
              << approx_desc(m.approx_bits) << ")\n";
  }
}

CodePtr code_from_decimal(const std::string& text) {
  BigNat n;
  try {
    n = BigNat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a decimal integer: " + text);
  }
  auto c = Codec::from_integer(n);
  if (!c)
    throw std::invalid_argument(
        text + " is not a code: neither an odd symbol value nor a gapless "
               "prime-power sequence value");
  return *c;
}

std::vector<Proof> load_corpus(const std::string& dir, const SymbolTable& table) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".paproof") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<Proof> out;
  for (const auto& f : files) out.push_back(load_proof(f.string(), table));
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"arithmetization laboratory for a first-order proof calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  CommonOpts common;
  app.add_option("--mode", common.mode, "calculus: pa, pf, or toy")
      ->capture_default_str();
  app.add_option("--table", common.table_file, "symbol table file");
  app.add_option("--bits", common.bits, "bit budget for printing exact values")
      ->capture_default_str();

  std::string expr, kind = "auto", pred_name, proof_file, out_file;
  std::string corpus_dir = "corpus/proofs";
  std::vector<std::string> pred_args;
  std::uint64_t budget = 10000, seed = 1, search_lines = 6;
  std::optional<std::uint64_t> diag_var;

  auto* enc = app.add_subcommand("encode", "expression text -> code");
  enc->add_option("expr", expr, "formula or term, fully parenthesized")->required();
  enc->add_option("--kind", kind, "formula, term, or auto")->capture_default_str();

  auto* dec = app.add_subcommand("decode", "decimal integer -> expression");
  dec->add_option("value", expr, "decimal integer")->required();

  auto* ev = app.add_subcommand("eval-pred", "evaluate a predicate on integers");
  ev->add_option("name", pred_name,
                 "gd, evbl, fml, ax, mp, gen, prf, pf, rf, or ref")
      ->required();
  ev->add_option("args", pred_args, "decimal integers")->expected(-1);

  auto* chk = app.add_subcommand("check-proof", "check a .paproof script");
  chk->add_option("file", proof_file, "proof script")->required();

  auto* srch = app.add_subcommand("search-proof", "bounded forward search");
  srch->add_option("target", expr, "formula to derive")->required();
  srch->add_option("--budget", search_lines, "maximum proof lines")
      ->capture_default_str();

  auto* diag = app.add_subcommand("diagonalize", "run the diagonal construction");
  diag->add_option("phi", expr, "formula with one free variable")->required();
  diag->add_option("--var", diag_var, "substituted variable index");

  auto* lab = app.add_subcommand("lemma-lab", "adjudicate the claim suite");
  lab->add_option("--corpus", corpus_dir, "directory of .paproof scripts")
      ->capture_default_str();
  lab->add_option("--budget", budget, "sampling budget")->capture_default_str();
  lab->add_option("--seed", seed, "sampling seed")->capture_default_str();
  lab->add_option("--out", out_file, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  SymbolTable table = resolve_table(common);
  Codec codec(table);

  if (enc->parsed()) {
    CodePtr code;
    if (kind == "term") {
      code = codec.encode_term(parse_term(expr, table));
    } else if (kind == "formula") {
      code = codec.encode_formula(parse_formula(expr, table));
    } else {
      try {
        code = codec.encode_formula(parse_formula(expr, table));
      } catch (const ParseError&) {
        code = codec.encode_term(parse_term(expr, table));
      }
    }
    print_code(code, common.bits);
    return 0;
  }

  if (dec->parsed()) {
    CodePtr code = code_from_decimal(expr);
    auto decoded = codec.decode_expression(code);
    if (std::holds_alternative<FormulaPtr>(decoded))
      std::cout << "formula: " << to_string(std::get<FormulaPtr>(decoded)) << "\n";
    else
      std::cout << "term: " << to_string(std::get<TermPtr>(decoded)) << "\n";
    return 0;
  }

  if (ev->parsed()) {
    Predicates preds(codec, resolve_mode(common));
    static const std::vector<std::string> known = {
        "gd", "evbl", "fml", "ax", "mp", "gen", "prf", "pf", "rf", "ref"};
    if (std::find(known.begin(), known.end(), pred_name) == known.end())
      throw std::invalid_argument("unknown predicate: " + pred_name);
    bool has_char = pred_name == "prf" || pred_name == "pf" ||
                    pred_name == "rf" || pred_name == "ref";
    std::vector<CodePtr> args;
    bool all_codes = true;
    for (const auto& a : pred_args) {
      auto c = Codec::from_integer(BigNat(a));
      if (!c) {
        all_codes = false;  // integers that are not codes falsify everything
        break;
      }
      args.push_back(*c);
    }
    bool val = all_codes && preds.eval_named(pred_name, args);
    std::cout << pred_name << ": " << (val ? "true" : "false") << "\n";
    if (has_char)
      std::cout << "characteristic value: " << (val ? 0 : 1) << "\n";
    return 0;
  }

  if (chk->parsed()) {
    TheoryMode mode = resolve_mode(common);
    Proof p = load_proof(proof_file, table);
    CheckResult r = check_proof(p, mode);
    for (const auto& d : r.diagnostics) std::cout << d << "\n";
    std::cout << "annotations: " << (r.annotations_ok ? "ok" : "broken") << "\n";
    std::cout << "sequence verdict: " << (r.ok ? "valid" : "invalid") << "\n";
    Predicates preds(codec, mode);
    CodePtr code = codec.encode_proof(p.formulas());
    std::cout << "prf on the code agrees: "
              << (preds.prf(code) == r.ok ? "yes" : "NO (bridge broken)") << "\n";
    CodePtr last_code = codec.encode_formula(p.last_formula());
    std::cout << "pf(code, last line): "
              << (preds.pf(code, last_code) ? "true" : "false") << "\n";
    print_code(code, common.bits);
    return r.ok ? 0 : 1;
  }

  if (srch->parsed()) {
    TheoryMode mode = resolve_mode(common);
    FormulaPtr target = parse_formula(expr, table);
    SearchResult r = bounded_proof_search(target, mode, search_lines);
    std::cout << "axiom pool: " << r.stats.axiom_pool
              << ", derived: " << r.stats.derived
              << ", expansions: " << r.stats.expansions << "\n";
    if (r.proof) {
      std::cout << "proof (" << r.proof->lines.size() << " lines):\n"
                << to_script(*r.proof);
      return 0;
    }
    std::cout << (r.stats.exhausted
                      ? "no proof within the budget; closure exhausted\n"
                      : "no proof within the budget; pool caps reached\n");
    return 1;
  }

  if (diag->parsed()) {
    FormulaPtr phi = parse_formula(expr, table);
    DiagResult r = diagonalize(codec, phi, diag_var);
    std::cout << "beta: " << to_string(r.beta) << "\n";
    Materialized m = materialize(r.m, 1 << 20);
    std::cout << "m: sequence of " << lh(r.m) << " symbols, ";
    if (m.overflow())
      std::cout << approx_desc(m.approx_bits) << "\n";
    else
      std::cout << bit_length(*m.value) << " bits\n";
    std::cout << "delta: " << to_string(r.delta) << "\n";
    std::cout << "fixed point: " << (r.fixed_point_ok ? "verified" : "FAILED")
              << "\n";
    return r.fixed_point_ok ? 0 : 1;
  }

  // lemma-lab
  std::vector<Proof> corpus = load_corpus(corpus_dir, table);
  LabReport report = run_lemma_lab(codec, corpus, LabConfig{budget, seed});
  std::string text = report_json(report).dump(2) + "\n";
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
