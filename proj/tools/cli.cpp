#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "epcodes/classify.hpp"
#include "epcodes/equiv.hpp"
#include "epcodes/errors.hpp"
#include "epcodes/tables.hpp"

#ifndef EPCODES_VERSION
#define EPCODES_VERSION "0.0.0"
#endif

namespace epc::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

std::vector<std::string> basis_strings(const FpCode& c) {
  std::vector<std::string> out;
  for (const auto& v : c.basis().row_vecs()) {
    std::string s;
    for (std::size_t j = 0; j < v.size(); ++j) s += std::to_string(v[j]) + (j + 1 < v.size() ? " " : "");
    out.push_back(s);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_lines(const std::vector<std::string>& rows, const std::string& indent) {
  if (rows.empty()) return indent + "(none)\n";
  std::string out;
  for (const auto& r : rows) out += indent + r + '\n';
  return out;
}

// ---- subcommands ----

struct AnalyzeArgs {
  std::string file;
};

int cmd_analyze(const AnalyzeArgs& a, const std::string& format, std::ostream& out) {
  const EpGenMatrix g = parse_gen_matrix(read_file(a.file));
  const auto report = analyze(g);
  out << (format == "json" ? report_json(report) + "\n" : report_text(report));
  return kOk;
}

struct ClassifyArgs {
  std::string kind;
  unsigned p = 0;
  std::size_t n = 0;
  std::string output;
  unsigned workers = 1;
  bool force = false;
};

std::string run_header(const Classification& c, unsigned workers) {
  json h;
  h["type"] = "run";
  h["tool"] = "ep-codes";
  h["version"] = EPCODES_VERSION;
  h["kind"] = std::string(to_string(c.kind));
  h["p"] = c.p;
  h["n"] = c.n;
  h["workers"] = workers;
  h["classes"] = c.classes.size();
  json dist = json::object();
  for (const auto& [d, count] : c.distance_counts()) dist[std::to_string(d)] = count;
  h["by_distance"] = dist;
  h["zero_code_convention"] = "the zero code is one class and has no distance";
  h["canonical_keys"] = !c.pairwise_fallback;
  if (!c.note.empty()) h["note"] = c.note;
  return h.dump();
}

int cmd_classify(const ClassifyArgs& a, const std::string& format, std::ostream& out, std::ostream& err) {
  const auto kind = parse_class_kind(a.kind);
  if (!kind) {
    err << "error: unknown classification kind '" << a.kind
        << "' (expected lcd, mds-amds-lcd, left-self-dual or self-dual)\n";
    return kUsage;
  }
  require_prime(a.p);
  if (a.force && enumeration_size(*kind, a.p, a.n) > kEnumerationBudget)
    err << "warning: p=" << a.p << " n=" << a.n << " is over the enumeration budget (largest feasible n is "
        << largest_feasible_n(*kind, a.p) << "); proceeding because --force was given\n";

  ClassifyOptions opts;
  opts.workers = a.workers;
  opts.force = a.force;
  const Classification c = classify(*kind, a.p, a.n, opts);
  const std::string jsonl = run_header(c, a.workers) + "\n" + records_jsonl(c);

  if (!a.output.empty()) {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw std::ios_base::failure("cannot write " + a.output);
    f << jsonl;
    if (!f) throw std::ios_base::failure("write failed for " + a.output);
  }
  if (format == "json") {
    if (a.output.empty()) out << jsonl;
  } else if (a.output.empty()) {
    out << format_text(c);
  } else {
    out << lines_of(format_text(c)).front() << '\n';
    const auto dist = c.distance_counts();
    if (!dist.empty()) {
      out << "by distance (the zero code has no distance and is not tallied):";
      for (const auto& [d, count] : dist) out << " d=" << d << ':' << count;
      out << '\n';
    }
    out << "records written to " << a.output << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::vector<int> tables;
  std::optional<std::size_t> max_n;
  bool strict = false;
  unsigned workers = 1;
  bool force = false;
};

int cmd_verify(const VerifyArgs& a, const std::string& format, std::ostream& out, std::ostream& err) {
  std::vector<int> ids = a.tables.empty() ? table_ids() : a.tables;
  for (int id : ids) {
    try {
      (void)paper_table(id);
    } catch (const std::out_of_range&) {
      err << "error: unknown table " << id << "; available tables are 1 to " << table_ids().back() << '\n';
      return kUnknownTable;
    }
  }
  bool ok = true;
  for (int id : ids) {
    VerifyOptions opts;
    opts.max_n = a.max_n;
    opts.workers = a.workers;
    opts.force = a.force;
    const auto report = verify_table(id, opts);
    const bool passes = report.passes(a.strict);
    ok = ok && passes;
    if (format == "json") {
      json j;
      j["type"] = "table";
      j["id"] = report.id;
      j["caption"] = report.caption;
      j["passes"] = passes;
      j["strict"] = a.strict;
      auto rows = json::array();
      for (const auto& r : report.rows) {
        json row;
        row["label"] = r.label;
        row["verdict"] = std::string(to_string(r.verdict));
        row["known"] = r.allowlisted;
        row["detail"] = r.detail;
        rows.push_back(row);
      }
      j["rows"] = rows;
      out << j.dump() << '\n';
    } else {
      out << format_report(report);
    }
  }
  return ok ? kOk : kNegative;
}

struct EquivArgs {
  std::string first;
  std::string second;
};

int cmd_equiv(const EquivArgs& a, const std::string& format, std::ostream& out, std::ostream& err) {
  const EpGenMatrix g1 = parse_gen_matrix(read_file(a.first));
  const EpGenMatrix g2 = parse_gen_matrix(read_file(a.second));
  if (g1.modulus() != g2.modulus() || g1.length() != g2.length()) {
    err << "error: inputs differ in parameters (p=" << g1.modulus() << " n=" << g1.length() << " versus p="
        << g2.modulus() << " n=" << g2.length() << ")\n";
    return kMismatch;
  }
  const auto w = equivalent_ep(code_from_generators(g1), code_from_generators(g2));
  if (format == "json") {
    json j;
    j["equivalent"] = w.has_value();
    if (w) {
      j["perm"] = w->perm();
      auto scale = json::array();
      for (const auto& e : w->scale()) scale.push_back(format_elem(e));
      j["scale"] = scale;
    }
    out << j.dump() << '\n';
  } else if (w) {
    out << "equivalent\n";
    out << "witness: coordinate i of the first code moves to perm[i] of the second, which is then multiplied on the "
           "right by scale[perm[i]]\n";
    out << "perm:";
    for (auto x : w->perm()) out << ' ' << x;
    out << "\nscale:";
    for (const auto& e : w->scale()) out << ' ' << format_elem(e);
    out << '\n';
  } else {
    out << "inequivalent\n";
  }
  return w ? kOk : kNegative;
}

struct BoundArgs {
  std::size_t n = 0;
};

int cmd_bound(const BoundArgs& a, const std::string& format, std::ostream& out) {
  const auto lb = ternary_lcd_lower_bound(a.n);
  if (format == "json") {
    json j;
    j["n"] = lb.n;
    j["phi"] = lb.phi;
    j["denominator"] = lb.denominator;
    j["bound"] = lb.bound;
    out << j.dump() << '\n';
  } else {
    out << "ternary LCD lower bound for n=" << lb.n << ": " << lb.bound << '\n';
    for (std::size_t m = 0; m < lb.phi.size(); ++m)
      out << "  phi(" << lb.n << "," << m << ") = " << lb.phi[m] << '\n';
    out << "  denominator 2^(n-1) n! = " << lb.denominator << '\n';
  }
  return kOk;
}

struct RightArgs {
  unsigned p = 0;
  std::size_t n = 0;
};

int cmd_right(const RightArgs& a, const std::string& format, std::ostream& out) {
  require_prime(a.p);
  const auto rep = right_self_dual_report(a.p, a.n);
  if (format == "json") {
    auto j = json::parse(record_json(rep.record));
    j["uniqueness_checked"] = rep.uniqueness_checked;
    if (rep.uniqueness_checked) j["unique"] = rep.unique;
    out << j.dump() << '\n';
  } else {
    out << "right self-dual code t F_" << a.p << "^" << a.n << ": d="
        << (rep.record.d ? std::to_string(*rep.record.d) : std::string("-")) << ' '
        << to_string(rep.record.mds_status) << '\n';
    if (rep.uniqueness_checked)
      out << "unique among all codes of this length: " << yes_no(rep.unique) << '\n';
    else
      out << "uniqueness not checked exhaustively at this length\n";
  }
  return kOk;
}

}  // namespace

AnalysisReport analyze(const EpGenMatrix& g) {
  const EpCode c = code_from_generators(g);
  CodeAnalysis a;
  a.p = c.modulus();
  a.n = c.length();
  a.m1 = c.m1();
  a.m2 = c.m2();
  a.size_exponent = c.cardinality_exp();
  a.free = c.is_free();
  a.residue_basis = basis_strings(c.residue());
  a.torsion_basis = basis_strings(c.torsion());
  a.left_dual = lines_of(format_rows(canonical_generator_matrix(left_dual(c))));
  a.right_dual = lines_of(format_rows(canonical_generator_matrix(right_dual(c))));
  a.lcd = is_lcd(c);
  a.left_nice = is_left_nice(c);
  a.right_nice = is_right_nice(c);
  a.left_self_dual = is_left_self_dual(c);
  a.right_self_dual = is_right_self_dual(c);
  a.self_dual = is_self_dual(c);
  a.qsd = is_qsd(c);
  a.d = min_distance(c);
  a.mds_status = std::string(to_string(mds_status_ep(c)));
  a.canonical_generator = lines_of(format_rows(canonical_generator_matrix(c)));
  return AnalysisReport{format_gen_matrix(g), std::move(a)};
}

std::string report_json(const AnalysisReport& r) {
  const auto& a = r.analysis;
  json j;
  j["input"] = lines_of(r.input);
  j["p"] = a.p;
  j["n"] = a.n;
  j["m1"] = a.m1;
  j["m2"] = a.m2;
  j["size_exponent"] = a.size_exponent;
  j["free"] = a.free;
  j["residue_basis"] = a.residue_basis;
  j["torsion_basis"] = a.torsion_basis;
  j["left_dual"] = a.left_dual;
  j["right_dual"] = a.right_dual;
  j["lcd"] = a.lcd;
  j["left_nice"] = a.left_nice;
  j["right_nice"] = a.right_nice;
  j["left_self_dual"] = a.left_self_dual;
  j["right_self_dual"] = a.right_self_dual;
  j["self_dual"] = a.self_dual;
  j["qsd"] = a.qsd;
  if (a.d)
    j["d"] = *a.d;
  else
    j["d"] = nullptr;
  j["mds_status"] = a.mds_status;
  j["canonical_generator"] = a.canonical_generator;
  return j.dump();
}

std::string report_text(const AnalysisReport& r) {
  const auto& a = r.analysis;
  std::ostringstream os;
  os << "input:\n" << join_lines(lines_of(r.input), "  ");
  os << "p=" << a.p << " n=" << a.n << " m1=" << a.m1 << " m2=" << a.m2 << " |C|=" << a.p << '^' << a.size_exponent
     << " free=" << yes_no(a.free) << '\n';
  os << "residue code basis:\n" << join_lines(a.residue_basis, "  ");
  os << "torsion code basis:\n" << join_lines(a.torsion_basis, "  ");
  os << "left dual:\n" << join_lines(a.left_dual, "  ");
  os << "right dual:\n" << join_lines(a.right_dual, "  ");
  os << "lcd=" << yes_no(a.lcd) << " left_nice=" << yes_no(a.left_nice) << " right_nice=" << yes_no(a.right_nice)
     << '\n';
  os << "left_self_dual=" << yes_no(a.left_self_dual) << " right_self_dual=" << yes_no(a.right_self_dual)
     << " self_dual=" << yes_no(a.self_dual) << " qsd=" << yes_no(a.qsd) << '\n';
  os << "d=" << (a.d ? std::to_string(*a.d) : std::string("absent")) << " status=" << a.mds_status << '\n';
  os << "canonical generator matrix:\n" << join_lines(a.canonical_generator, "  ");
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear codes over the ring E_p: analysis, equivalence, classification and table checks", "ep-codes"};
  app.set_version_flag("--version", std::string(EPCODES_VERSION));
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze one code given by a generator matrix file");
  analyze_cmd->add_option("file", analyze_args.file, "Generator matrix file")->required();
  add_format(analyze_cmd);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a family of codes up to monomial equivalence");
  classify_cmd->add_option("kind", classify_args.kind, "lcd | mds-amds-lcd | left-self-dual | self-dual")->required();
  classify_cmd->add_option("--p", classify_args.p, "Prime modulus")->required();
  classify_cmd->add_option("--n", classify_args.n, "Code length")->required();
  classify_cmd->add_option("--output", classify_args.output, "Write line-delimited JSON records to this file");
  classify_cmd->add_option("--workers", classify_args.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  classify_cmd->add_flag("--force", classify_args.force, "Run even when over the enumeration budget");
  add_format(classify_cmd);

  VerifyArgs verify_args;
  std::size_t max_n = 0;
  auto* verify_cmd = app.add_subcommand("verify-tables", "Recompute the published tables and report per-row verdicts");
  verify_cmd->add_option("--table", verify_args.tables, "Table id (repeatable; default all)");
  auto* max_n_opt = verify_cmd->add_option("--max-n", max_n, "Largest length to classify exhaustively");
  verify_cmd->add_flag("--strict", verify_args.strict, "Treat known discrepancies as failures");
  verify_cmd->add_option("--workers", verify_args.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  verify_cmd->add_flag("--force", verify_args.force, "Classify past the enumeration budget");
  add_format(verify_cmd);

  EquivArgs equiv_args;
  auto* equiv_cmd = app.add_subcommand("equiv", "Test two codes for monomial equivalence");
  equiv_cmd->add_option("first", equiv_args.first, "Generator matrix file")->required();
  equiv_cmd->add_option("second", equiv_args.second, "Generator matrix file")->required();
  add_format(equiv_cmd);

  BoundArgs bound_args;
  auto* bound_cmd = app.add_subcommand("lower-bound", "Lower bound on the number of LCD codes over E_3");
  bound_cmd->add_option("--n", bound_args.n, "Code length")->required();
  add_format(bound_cmd);

  RightArgs right_args;
  auto* right_cmd = app.add_subcommand("right-self-dual", "Report on the right self-dual code of a given length");
  right_cmd->add_option("--p", right_args.p, "Prime modulus")->required();
  right_cmd->add_option("--n", right_args.n, "Code length")->required();
  add_format(right_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (*max_n_opt) verify_args.max_n = max_n;

  try {
    if (*analyze_cmd) return cmd_analyze(analyze_args, format, out);
    if (*classify_cmd) return cmd_classify(classify_args, format, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, format, out, err);
    if (*equiv_cmd) return cmd_equiv(equiv_args, format, out, err);
    if (*bound_cmd) return cmd_bound(bound_args, format, out);
    if (*right_cmd) return cmd_right(right_args, format, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ModulusError& e) {
    err << "modulus error: " << e.what() << '\n';
    return kModulusError;
  } catch (const ShapeError& e) {
    err << "shape error: " << e.what() << '\n';
    return kShapeError;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << "; pass --force to run anyway\n";
    return kBudget;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace epc::cli
