#include "epcodes/tables.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "epcodes/errors.hpp"

namespace epc {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError("expected a non-negative integer, got '" + std::string(s) + "'", line, 1);
  return v;
}

std::uint64_t parse_assignment(std::string_view tok, std::string_view name, std::size_t line) {
  if (tok.substr(0, name.size() + 1) != std::string(name) + "=")
    throw ParseError("expected " + std::string(name) + "=<value>, got '" + std::string(tok) + "'", line, 1);
  return parse_uint(tok.substr(name.size() + 1), line);
}

TableKind parse_kind(std::string_view s, std::size_t line) {
  if (s == "lcd-count") return TableKind::LcdCount;
  if (s == "lcd-distance") return TableKind::LcdDistance;
  if (s == "mds-amds-lcd") return TableKind::MdsAmdsLcd;
  if (s == "left-self-dual") return TableKind::LeftSelfDual;
  if (s == "self-dual") return TableKind::SelfDual;
  throw ParseError("unknown table kind '" + std::string(s) + "'", line, 1);
}

struct PendingMatrix {
  std::size_t n = 0;
  std::size_t first_line = 0;
  std::string rows;
};

EpGenMatrix build_matrix(unsigned p, const PendingMatrix& m) {
  std::ostringstream text;
  text << "p=" << p << " n=" << m.n << '\n' << m.rows;
  try {
    return parse_gen_matrix(text.str());
  } catch (const ParseError& e) {
    std::string_view msg = e.what();
    if (e.line() != 0) msg.remove_prefix(std::min(msg.size(), msg.find(": ") + 2));
    throw ParseError(std::string(msg), m.first_line + (e.line() > 1 ? e.line() - 2 : 0), e.column());
  }
}

std::vector<PaperTable> load_all() {
  std::vector<PaperTable> out;
  for (const auto& f : fixture_texts()) out.push_back(parse_table_fixture(f.text));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

const std::vector<PaperTable>& all_tables() {
  static const std::vector<PaperTable> tables = load_all();
  return tables;
}

// ---- verification helpers ----

std::string vec_string(const FpVec& v) {
  std::string s;
  for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<char>('0' + v[j]);
  return s;
}

std::string status_word(TableKind kind) {
  switch (kind) {
    case TableKind::MdsAmdsLcd:
      return "LCD";
    case TableKind::LeftSelfDual:
      return "left self-dual";
    case TableKind::SelfDual:
      return "self-dual";
    default:
      return "";
  }
}

bool family_predicate(TableKind kind, const EpCode& c) {
  switch (kind) {
    case TableKind::MdsAmdsLcd:
      return is_lcd(c);
    case TableKind::LeftSelfDual:
      return is_left_self_dual(c);
    case TableKind::SelfDual:
      return is_self_dual(c);
    default:
      return false;
  }
}

ClassKind class_kind(TableKind kind) {
  switch (kind) {
    case TableKind::LeftSelfDual:
      return ClassKind::LeftSelfDual;
    case TableKind::SelfDual:
      return ClassKind::SelfDual;
    default:
      return ClassKind::Lcd;
  }
}

std::optional<FpVec> min_weight_word(const FpCode& c) {
  std::optional<FpVec> best;
  for_each_codeword(c, [&](std::span<const Digit> w) {
    const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Digit x) { return x != 0; }));
    if (wt == 0) return;
    if (!best || wt < best->weight()) best = FpVec(c.modulus(), std::vector<Digit>(w.begin(), w.end()));
  });
  return best;
}

// Why a matrix fails its family predicate, in terms of its printed rows.
std::vector<std::string> predicate_diagnostics(TableKind kind, const EpGenMatrix& g, const EpCode& c) {
  std::vector<std::string> out;
  const unsigned p = g.modulus();
  std::vector<FpVec> res;
  for (const auto& row : g.rows()) res.push_back(row.r_part());
  if (!c.is_free()) out.push_back("the code is not free (m2=" + std::to_string(c.m2()) + ")");
  if (kind == TableKind::LeftSelfDual || kind == TableKind::SelfDual) {
    for (std::size_t i = 0; i < res.size(); ++i)
      for (std::size_t j = i; j < res.size(); ++j) {
        const auto ip = res[i].dot(res[j]);
        if (ip != 0)
          out.push_back("residue rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " have inner product " + std::to_string(ip));
      }
    for (std::size_t i = 0; i < res.size(); ++i)
      for (std::size_t j = i + 1; j < res.size(); ++j)
        for (unsigned a = 1; a < p; ++a) {
          const FpVec v = res[i] + res[j].scaled(a);
          if (v.weight() == 1) {
            out.push_back("residue row " + std::to_string(i + 1) + " + " + (a == 1 ? "" : std::to_string(a) + "*") +
                          "row " + std::to_string(j + 1) + " = " + vec_string(v) +
                          " has weight 1, so the residue code cannot be self-orthogonal");
          }
        }
    if (kind == TableKind::LeftSelfDual && c.residue().dimension() * 2 != c.length())
      out.push_back("residue dimension " + std::to_string(c.residue().dimension()) + " is not n/2");
  } else if (kind == TableKind::MdsAmdsLcd && c.is_free()) {
    out.push_back("residue hull has dimension " + std::to_string(hull_dim(c.residue())));
  }
  return out;
}

std::vector<std::string> check_code(TableKind kind, std::size_t d, MdsStatus status, const EpGenMatrix& g) {
  std::vector<std::string> problems;
  const EpCode c = code_from_generators(g);
  if (!family_predicate(kind, c)) {
    problems.push_back("not " + status_word(kind));
    for (auto& s : predicate_diagnostics(kind, g, c)) problems.push_back(std::move(s));
  }
  const auto actual_d = min_distance(c);
  if (actual_d != d) {
    std::string msg = "minimum distance is " + (actual_d ? std::to_string(*actual_d) : std::string("undefined")) +
                      ", printed " + std::to_string(d);
    if (auto w = min_weight_word(c.torsion())) {
      msg += c.residue().contains(*w) ? "; minimum-weight codeword r*" : "; minimum-weight codeword t*";
      msg += vec_string(*w);
    }
    problems.push_back(std::move(msg));
  }
  const auto actual_status = mds_status_ep(c);
  if (actual_status != status)
    problems.push_back("status is " + std::string(to_string(actual_status)) + ", printed " +
                       std::string(to_string(status)) + " (size exponent " + std::to_string(c.cardinality_exp()) +
                       ")");
  return problems;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

std::string confirmed_detail(TableKind kind, std::size_t d, MdsStatus status) {
  return status_word(kind) + ", d=" + std::to_string(d) + ", " + std::string(to_string(status));
}

std::string record_summary(const ClassRecord& rec) {
  std::string s = "d=" + (rec.d ? std::to_string(*rec.d) : std::string("-")) + " " +
                  std::string(to_string(rec.mds_status)) + " [";
  std::istringstream rows(format_rows(rec.representative));
  bool first = true;
  for (std::string line; std::getline(rows, line); first = false) s += (first ? "" : " / ") + line;
  return s + "]";
}

class ClassificationCache {
 public:
  explicit ClassificationCache(const VerifyOptions& opts) : opts_(opts) {}

  const Classification& get(ClassKind kind, unsigned p, std::size_t n) {
    const auto key = std::make_tuple(kind, p, n);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      ClassifyOptions co;
      co.workers = opts_.workers;
      co.force = opts_.force;
      it = cache_.emplace(key, classify(kind, p, n, co)).first;
    }
    return it->second;
  }

 private:
  VerifyOptions opts_;
  std::map<std::tuple<ClassKind, unsigned, std::size_t>, Classification> cache_;
};

std::string skip_reason(std::size_t max_n) {
  return "beyond the classification limit (max-n " + std::to_string(max_n) + ")";
}

void verify_counts(const PaperTable& t, std::size_t max_n, ClassificationCache& cache, TableReport& report) {
  for (const auto& row : t.counts) {
    RowVerdict v;
      v.label = "n=" + std::to_string(row.n);
    if (row.n > max_n) {
      v.verdict = Verdict::Skipped;
      v.detail = "printed " + std::to_string(row.total) + "; " + skip_reason(max_n);
    } else {
      try {
        const auto total = cache.get(ClassKind::Lcd, t.p, row.n).classes.size();
        v.verdict = total == row.total ? Verdict::Confirmed : Verdict::Discrepancy;
        v.detail = "recomputed " + std::to_string(total) + ", printed " + std::to_string(row.total) +
                   " (the zero code counts as one class)";
      } catch (const BudgetExceeded& e) {
        v.verdict = Verdict::Skipped;
        v.detail = e.what();
      }
    }
    report.rows.push_back(std::move(v));
  }
}

void verify_distances(const PaperTable& t, std::size_t max_n, ClassificationCache& cache, TableReport& report) {
  for (const auto& row : t.distances) {
    RowVerdict v;
      v.label = "n=" + std::to_string(row.n);
    if (row.n > max_n) {
      v.verdict = Verdict::Skipped;
      v.detail = skip_reason(max_n);
      report.rows.push_back(std::move(v));
      continue;
    }
    try {
      const auto counts = cache.get(ClassKind::Lcd, t.p, row.n).distance_counts();
      std::vector<std::string> mismatches;
      std::string recomputed;
      const std::size_t width = std::max(row.cells.size(), counts.empty() ? 0 : counts.rbegin()->first);
      for (std::size_t d = 1; d <= width; ++d) {
        const auto it = counts.find(d);
        const std::uint64_t got = it == counts.end() ? 0 : it->second;
        const std::uint64_t printed = d <= row.cells.size() ? row.cells[d - 1].value_or(0) : 0;
        recomputed += (d > 1 ? " " : "") + ("N" + std::to_string(d) + "=" + std::to_string(got));
        if (got != printed)
          mismatches.push_back("N" + std::to_string(d) + " recomputed " + std::to_string(got) + ", printed " +
                               std::to_string(printed));
      }
      v.verdict = mismatches.empty() ? Verdict::Confirmed : Verdict::Discrepancy;
      v.detail = mismatches.empty() ? recomputed + " (zero code not tallied)" : join(mismatches);
    } catch (const BudgetExceeded& e) {
      v.verdict = Verdict::Skipped;
      v.detail = e.what();
    }
    report.rows.push_back(std::move(v));
  }
}

void verify_matrices(const PaperTable& t, std::size_t max_n, ClassificationCache& cache, TableReport& report) {
  std::map<std::size_t, std::vector<const PrintedCode*>> blocks;
  for (const auto& pc : t.codes) blocks[pc.n].push_back(&pc);

  for (const auto& [n, block] : blocks) {
    std::vector<EpCode> codes;
    for (const auto* pc : block) codes.push_back(code_from_generators(pc->matrix));
    for (std::size_t i = 0; i < block.size(); ++i) {
      const auto& pc = *block[i];
      auto problems = check_code(t.kind, pc.d, pc.status, pc.matrix);
      for (std::size_t j = 0; j < i; ++j)
        if (equivalent_ep(codes[j], codes[i])) problems.push_back("equivalent to " + block[j]->label());
      RowVerdict v;
      v.label = pc.label();
      v.verdict = problems.empty() ? Verdict::Confirmed : Verdict::Discrepancy;
      v.detail = problems.empty() ? confirmed_detail(t.kind, pc.d, pc.status) : join(problems);
      v.allowlisted = !problems.empty() && is_known_discrepancy(t.id, v.label);
      report.rows.push_back(std::move(v));
      for (const auto& var : pc.variants) {
        auto vp = check_code(t.kind, pc.d, pc.status, var.matrix);
        RowVerdict vv;
      vv.label = pc.label() + " variant " + var.label;
        vv.verdict = vp.empty() ? Verdict::Confirmed : Verdict::Discrepancy;
        vv.detail = vp.empty() ? confirmed_detail(t.kind, pc.d, pc.status) : join(vp);
        report.rows.push_back(std::move(vv));
      }
    }
  }

  // Completeness: each length up to max_n, plus printed lengths beyond it.
  std::size_t last = max_n;
  if (!blocks.empty()) last = std::max(last, blocks.rbegin()->first);
  for (std::size_t n = 1; n <= last; ++n) {
    const auto bit = blocks.find(n);
    RowVerdict v;
      v.label = "n=" + std::to_string(n) + " classification";
    if (n > max_n) {
      if (bit == blocks.end()) continue;
      v.verdict = Verdict::Skipped;
      v.detail = skip_reason(max_n) + "; printed rows verified directly";
      report.rows.push_back(std::move(v));
      continue;
    }
    std::vector<ClassRecord> found;
    try {
      found = cache.get(class_kind(t.kind), t.p, n).mds_amds();
    } catch (const BudgetExceeded& e) {
      v.verdict = Verdict::Skipped;
      v.detail = e.what();
      report.rows.push_back(std::move(v));
      continue;
    }

    // A printed row counts as matched when the row itself or one of its variants is equivalent.
    struct Candidate {
      const PrintedCode* printed;
      std::string label;
      EpCode code;
    };
    std::vector<Candidate> candidates;
    if (bit != blocks.end())
      for (const auto* pc : bit->second) {
        candidates.push_back({pc, pc->label(), code_from_generators(pc->matrix)});
        for (const auto& var : pc->variants)
          candidates.push_back({pc, pc->label() + " variant " + var.label, code_from_generators(var.matrix)});
      }
    std::map<const PrintedCode*, std::size_t> hits;
    std::vector<std::string> problems;
    std::vector<std::string> matches;
    for (const auto& rec : found) {
      const EpCode c = code_from_generators(rec.representative);
      const Candidate* match = nullptr;
      for (const auto& cand : candidates)
        if (equivalent_ep(c, cand.code)) {
          match = &cand;
          break;
        }
      if (match) {
        ++hits[match->printed];
        matches.push_back(match->label);
      } else {
        problems.push_back("class " + record_summary(rec) + " matches no printed row");
      }
    }
    if (bit != blocks.end())
      for (const auto* pc : bit->second) {
        const auto h = hits.find(pc);
        if (h == hits.end())
          problems.push_back(pc->label() + " matches no class found by exhaustive search");
        else if (h->second > 1)
          problems.push_back(pc->label() + " matches " + std::to_string(h->second) + " distinct classes");
      }
    v.verdict = problems.empty() ? Verdict::Confirmed : Verdict::Discrepancy;
    if (problems.empty()) {
      v.detail = std::to_string(found.size()) + " MDS/AMDS " + status_word(t.kind) + " class" +
                 (found.size() == 1 ? "" : "es") + " found";
      if (!matches.empty()) {
        v.detail += ", matching ";
        for (std::size_t i = 0; i < matches.size(); ++i) v.detail += (i ? ", " : "") + matches[i];
      }
    } else {
      v.detail = "exhaustive search found " + std::to_string(found.size()) + " MDS/AMDS classes; " + join(problems);
    }
    report.rows.push_back(std::move(v));
  }
}

}  // namespace

std::string PrintedCode::label() const { return "n=" + std::to_string(n) + " #" + std::to_string(index); }

PaperTable parse_table_fixture(std::string_view text) {
  PaperTable t;
  bool have_p = false;
  std::optional<PendingMatrix> pending;
  std::optional<std::size_t> pending_d;
  std::optional<MdsStatus> pending_status;
  std::optional<std::string> pending_variant;
  std::map<std::size_t, std::size_t> block_sizes;

  std::istringstream is{std::string(text)};
  std::size_t lineno = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (pending) {
      if (toks[0] != "end") {
        pending->rows += std::string(line) + '\n';
        continue;
      }
      if (!have_p) throw ParseError("matrix before the p directive", lineno, 1);
      EpGenMatrix m = build_matrix(t.p, *pending);
      if (pending_variant) {
        if (t.codes.empty()) throw ParseError("variant without a preceding code", lineno, 1);
        t.codes.back().variants.push_back({*pending_variant, std::move(m)});
      } else {
        t.codes.push_back(PrintedCode{.n = pending->n,
                                      .d = *pending_d,
                                      .status = *pending_status,
                                      .matrix = std::move(m),
                                      .index = ++block_sizes[pending->n],
                                      .variants = {}});
      }
      pending.reset();
      pending_variant.reset();
      continue;
    }

    const std::string& head = toks[0];
    if (head == "table" && toks.size() == 2) {
      t.id = static_cast<int>(parse_uint(toks[1], lineno));
    } else if (head == "caption") {
      const auto pos = line.find("caption") + 7;
      auto cap = std::string(line.substr(pos));
      cap.erase(0, cap.find_first_not_of(" \t"));
      cap.erase(cap.find_last_not_of(" \t\r") + 1);
      t.caption = cap;
    } else if (head == "p" && toks.size() == 2) {
      t.p = static_cast<unsigned>(parse_uint(toks[1], lineno));
      require_prime(t.p);
      have_p = true;
    } else if (head == "kind" && toks.size() == 2) {
      t.kind = parse_kind(toks[1], lineno);
    } else if (head == "count" && toks.size() == 3) {
      t.counts.push_back({parse_assignment(toks[1], "n", lineno), parse_uint(toks[2], lineno)});
    } else if (head == "dist" && toks.size() >= 2) {
      DistanceRow row{parse_assignment(toks[1], "n", lineno), {}};
      for (std::size_t i = 2; i < toks.size(); ++i)
        row.cells.push_back(toks[i] == "-" ? std::nullopt : std::optional(parse_uint(toks[i], lineno)));
      t.distances.push_back(std::move(row));
    } else if (head == "code" && toks.size() == 4) {
      pending = PendingMatrix{parse_assignment(toks[1], "n", lineno), lineno + 1, {}};
      pending_d = parse_assignment(toks[2], "d", lineno);
      if (toks[3] == "MDS")
        pending_status = MdsStatus::Mds;
      else if (toks[3] == "AMDS")
        pending_status = MdsStatus::Amds;
      else
        throw ParseError("expected MDS or AMDS, got '" + toks[3] + "'", lineno, 1);
    } else if (head == "variant" && toks.size() == 2) {
      if (t.codes.empty()) throw ParseError("variant without a preceding code", lineno, 1);
      pending = PendingMatrix{t.codes.back().n, lineno + 1, {}};
      pending_variant = toks[1];
    } else {
      throw ParseError("unrecognized directive '" + head + "'", lineno, 1);
    }
  }
  if (pending) throw ParseError("matrix block not closed with 'end'", lineno, 1);
  if (t.id == 0 || !have_p) throw ParseError("fixture lacks a table id or modulus", lineno, 1);
  return t;
}

std::vector<int> table_ids() {
  std::vector<int> ids;
  for (const auto& t : all_tables()) ids.push_back(t.id);
  return ids;
}

const PaperTable& paper_table(int id) {
  for (const auto& t : all_tables())
    if (t.id == id) return t;
  throw std::out_of_range("unknown table " + std::to_string(id));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Confirmed:
      return "confirmed";
    case Verdict::Discrepancy:
      return "discrepancy";
    case Verdict::Skipped:
      return "skipped";
  }
  return "confirmed";
}

std::size_t TableReport::count(Verdict v) const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [v](const auto& r) { return r.verdict == v; }));
}

bool TableReport::passes(bool strict) const {
  return std::none_of(rows.begin(), rows.end(), [strict](const RowVerdict& r) {
    return r.verdict == Verdict::Discrepancy && (strict || !r.allowlisted);
  });
}

bool is_known_discrepancy(int table, std::string_view label) { return table == 7 && label == "n=8 #1"; }

std::size_t default_max_n(int table) {
  switch (table) {
    case 1:
    case 3:
    case 5:
    case 9:
      return 6;
    case 2:
    case 4:
    case 6:
      return 5;
    case 7:
      return 8;
    case 8:
      return 6;
    case 10:
      return 4;
    default:
      return 0;
  }
}

TableReport verify_table(int id, const VerifyOptions& opts) {
  const PaperTable& t = paper_table(id);
  TableReport report{.id = t.id, .caption = t.caption, .rows = {}};
  const std::size_t max_n = opts.max_n.value_or(default_max_n(id));
  ClassificationCache cache(opts);
  switch (t.kind) {
    case TableKind::LcdCount:
      verify_counts(t, max_n, cache, report);
      break;
    case TableKind::LcdDistance:
      verify_distances(t, max_n, cache, report);
      break;
    default:
      verify_matrices(t, max_n, cache, report);
      break;
  }
  return report;
}

std::string format_report(const TableReport& r) {
  std::ostringstream os;
  os << "Table " << r.id << ": " << r.caption << '\n';
  for (const auto& row : r.rows) {
    os << "  [" << to_string(row.verdict) << (row.allowlisted ? ", known" : "") << "] " << row.label;
    if (!row.detail.empty()) os << ": " << row.detail;
    os << '\n';
  }
  const auto known = static_cast<std::size_t>(
      std::count_if(r.rows.begin(), r.rows.end(), [](const auto& x) { return x.allowlisted; }));
  os << "  " << r.count(Verdict::Confirmed) << " confirmed, " << r.count(Verdict::Discrepancy) << " discrepancies ("
     << known << " known), " << r.count(Verdict::Skipped) << " skipped\n";
  return os.str();
}

}  // namespace epc
