#include "epcodes/classify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "epcodes/errors.hpp"
#include "epcodes/subspaces.hpp"

namespace epc {

namespace {

struct Unit {
  std::size_t k;
  std::vector<std::size_t> pivots;
};

using Lift = std::optional<EpCode> (*)(const FpCode&);

std::vector<std::size_t> dimensions(ClassKind kind, std::size_t n) {
  std::vector<std::size_t> dims;
  switch (kind) {
    case ClassKind::Lcd:
    case ClassKind::MdsAmdsLcd:
      for (std::size_t k = 0; k <= n; ++k) dims.push_back(k);
      break;
    case ClassKind::LeftSelfDual:
      if (n % 2 == 0) dims.push_back(n / 2);
      break;
    case ClassKind::SelfDual:
      for (std::size_t k = 0; 2 * k <= n; ++k) dims.push_back(k);
      break;
  }
  return dims;
}

std::optional<EpCode> lift_lcd(const FpCode& d) {
  if (!is_lcd_fp(d)) return std::nullopt;
  return EpCode::free_code(d);
}

std::optional<EpCode> lift_left_self_dual(const FpCode& d) {
  if (!is_self_dual_fp(d)) return std::nullopt;
  return EpCode::free_code(d);
}

std::optional<EpCode> lift_self_dual(const FpCode& d) {
  if (!is_self_orthogonal_fp(d)) return std::nullopt;
  return EpCode(d, dual_code(d));
}

Lift lift_for(ClassKind kind) {
  switch (kind) {
    case ClassKind::Lcd:
    case ClassKind::MdsAmdsLcd:
      return lift_lcd;
    case ClassKind::LeftSelfDual:
      return lift_left_self_dual;
    case ClassKind::SelfDual:
      return lift_self_dual;
  }
  return lift_lcd;
}

EpCode transport(const MonomialMapFp& m, const EpCode& c) {
  return EpCode(apply_fp(m, c.residue()), apply_fp(m, c.torsion()));
}

using KeyedClasses = std::map<std::string, EpCode>;

void run_unit(unsigned p, std::size_t n, const Unit& unit, Lift lift, const CanonicalBudget& budget,
              KeyedClasses& out) {
  for_each_subspace_with_pivots(p, n, unit.pivots, [&](const FpCode& sub) {
    auto code = lift(sub);
    if (!code) return;
    auto form = canonical_form(*code, budget);
    if (!form) throw std::logic_error("canonical form unavailable inside the canonical budget");
    if (out.find(form->key) == out.end()) out.emplace(std::move(form->key), transport(form->map, *code));
  });
}

KeyedClasses classify_by_key(unsigned p, std::size_t n, const std::vector<Unit>& units, Lift lift,
                             const ClassifyOptions& opts) {
  const unsigned workers = std::max(1u, opts.workers);
  std::vector<KeyedClasses> partial(workers);
  if (workers == 1) {
    for (const auto& u : units) run_unit(p, n, u, lift, opts.budget, partial[0]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next.fetch_add(1); i < units.size(); i = next.fetch_add(1))
            run_unit(p, n, units[i], lift, opts.budget, partial[w]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(units.size());
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
  KeyedClasses merged;
  for (auto& part : partial) merged.merge(part);
  return merged;
}

std::vector<std::uint64_t> invariant_signature(const EpCode& c) {
  auto sig = weight_enumerator_fp(c.residue());
  auto tor = weight_enumerator_fp(c.torsion());
  sig.insert(sig.end(), tor.begin(), tor.end());
  sig.push_back(c.m1());
  sig.push_back(c.m2());
  return sig;
}

std::vector<EpCode> classify_pairwise(unsigned p, std::size_t n, const std::vector<Unit>& units, Lift lift) {
  std::map<std::vector<std::uint64_t>, std::vector<EpCode>> buckets;
  for (const auto& u : units) {
    for_each_subspace_with_pivots(p, n, u.pivots, [&](const FpCode& sub) {
      auto code = lift(sub);
      if (!code) return;
      auto& reps = buckets[invariant_signature(*code)];
      for (const auto& rep : reps)
        if (equivalent_ep(rep, *code)) return;
      reps.push_back(*code);
    });
  }
  std::vector<EpCode> out;
  for (auto& [sig, reps] : buckets)
    for (auto& c : reps) out.push_back(std::move(c));
  return out;
}

Classification run(ClassKind kind, unsigned p, std::size_t n, const ClassifyOptions& opts) {
  require_prime(p);
  Classification result;
  result.kind = kind;
  result.p = p;
  result.n = n;

  if (enumeration_size(kind, p, n) > kEnumerationBudget) {
    const std::size_t feasible = largest_feasible_n(kind, p);
    if (!opts.force) {
      std::ostringstream msg;
      msg << "classification of " << to_string(kind) << " codes at p=" << p << " n=" << n << " enumerates "
          << enumeration_size(kind, p, n) << " subspaces, over the budget of " << kEnumerationBudget
          << "; largest feasible n is " << feasible;
      throw BudgetExceeded(msg.str(), feasible);
    }
    result.over_budget = true;
  }

  if (kind == ClassKind::LeftSelfDual && n % 2 == 1) {
    result.note = "no left self-dual code has odd length: its residue would be a self-dual code of odd length";
    return result;
  }

  std::vector<Unit> units;
  for (auto k : dimensions(kind, n))
    for (auto& piv : pivot_patterns(n, k)) units.push_back({k, std::move(piv)});

  const Lift lift = lift_for(kind);
  if (n <= opts.budget.max_n(p)) {
    for (auto& [key, code] : classify_by_key(p, n, units, lift, opts))
      result.classes.push_back(make_record(code, to_hex(key)));
  } else {
    result.pairwise_fallback = true;
    result.note = "canonical forms are unavailable at this length; classes were separated by pairwise equivalence tests";
    for (const auto& code : classify_pairwise(p, n, units, lift)) result.classes.push_back(make_record(code));
  }

  if (kind == ClassKind::MdsAmdsLcd) result.classes = result.mds_amds();

  for (const auto& rec : result.classes) {
    if (!record_matches(rec, opts.budget)) throw std::logic_error("class record failed self-validation");
    if (kind == ClassKind::SelfDual) {
      const EpCode c = code_from_generators(rec.representative);
      if (!is_self_dual(c) || !is_qsd(c) || c.cardinality_exp() != n)
        throw std::logic_error("self-dual classification produced a code that is not self-dual");
    }
  }
  return result;
}

nlohmann::ordered_json record_object(const ClassRecord& rec) {
  nlohmann::ordered_json j;
  j["type"] = "class";
  j["p"] = rec.p;
  j["n"] = rec.n;
  if (rec.d)
    j["d"] = *rec.d;
  else
    j["d"] = nullptr;
  j["m1"] = rec.m1;
  j["m2"] = rec.m2;
  j["size_exponent"] = 2 * rec.m1 + rec.m2;
  j["mds_status"] = std::string(to_string(rec.mds_status));
  j["free"] = rec.flags.free;
  j["lcd"] = rec.flags.lcd;
  j["left_self_dual"] = rec.flags.left_self_dual;
  j["right_self_dual"] = rec.flags.right_self_dual;
  j["self_dual"] = rec.flags.self_dual;
  auto rows = nlohmann::ordered_json::array();
  std::istringstream lines(format_rows(rec.representative));
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  j["generator"] = rows;
  j["key"] = rec.key;
  return j;
}

}  // namespace

std::string_view to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Lcd:
      return "lcd";
    case ClassKind::MdsAmdsLcd:
      return "mds-amds-lcd";
    case ClassKind::LeftSelfDual:
      return "left-self-dual";
    case ClassKind::SelfDual:
      return "self-dual";
  }
  return "lcd";
}

std::optional<ClassKind> parse_class_kind(std::string_view s) {
  for (auto k : {ClassKind::Lcd, ClassKind::MdsAmdsLcd, ClassKind::LeftSelfDual, ClassKind::SelfDual})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

ClassRecord make_record(const EpCode& c, std::string key) {
  return ClassRecord{
      .p = c.modulus(),
      .n = c.length(),
      .representative = canonical_generator_matrix(c),
      .d = min_distance(c),
      .m1 = c.m1(),
      .m2 = c.m2(),
      .flags = CodeFlags{.lcd = is_lcd(c),
                         .left_self_dual = is_left_self_dual(c),
                         .right_self_dual = is_right_self_dual(c),
                         .self_dual = is_self_dual(c),
                         .free = c.is_free()},
      .mds_status = mds_status_ep(c),
      .key = std::move(key),
  };
}

bool record_matches(const ClassRecord& rec, const CanonicalBudget& budget) {
  const EpCode c = code_from_generators(rec.representative);
  std::string key;
  if (!rec.key.empty()) {
    auto k = canonical_key(c, budget);
    if (!k) return false;
    key = to_hex(*k);
  }
  return make_record(c, std::move(key)) == rec;
}

std::uint64_t enumeration_size(ClassKind kind, unsigned p, std::size_t n) {
  std::uint64_t total = 0;
  for (auto k : dimensions(kind, n)) {
    const auto g = gaussian_binomial(p, n, k);
    total = g > UINT64_MAX - total ? UINT64_MAX : total + g;
  }
  return total;
}

std::size_t largest_feasible_n(ClassKind kind, unsigned p) {
  std::size_t best = 0;
  // Enumeration sizes are not monotone in n for the left self-dual family
  // (odd n enumerate nothing), so scan a window past the first failure.
  for (std::size_t n = 1; n < 64; ++n) {
    if (enumeration_size(kind, p, n) <= kEnumerationBudget)
      best = n;
    else if (n > best + 2)
      break;
  }
  return best;
}

std::map<std::size_t, std::size_t> Classification::distance_counts() const {
  std::map<std::size_t, std::size_t> out;
  for (const auto& rec : classes)
    if (rec.d) ++out[*rec.d];
  return out;
}

std::vector<ClassRecord> Classification::mds_amds() const {
  std::vector<ClassRecord> out;
  for (const auto& rec : classes)
    if (rec.mds_status != MdsStatus::Neither) out.push_back(rec);
  return out;
}

Classification classify(ClassKind kind, unsigned p, std::size_t n, const ClassifyOptions& opts) {
  return run(kind, p, n, opts);
}

Classification classify_lcd(unsigned p, std::size_t n, const ClassifyOptions& opts) {
  return run(ClassKind::Lcd, p, n, opts);
}

Classification classify_mds_amds_lcd(unsigned p, std::size_t n, const ClassifyOptions& opts) {
  return run(ClassKind::MdsAmdsLcd, p, n, opts);
}

Classification classify_left_self_dual(unsigned p, std::size_t n, const ClassifyOptions& opts) {
  return run(ClassKind::LeftSelfDual, p, n, opts);
}

Classification classify_self_dual(unsigned p, std::size_t n, const ClassifyOptions& opts) {
  return run(ClassKind::SelfDual, p, n, opts);
}

RightSelfDualReport right_self_dual_report(unsigned p, std::size_t n) {
  require_prime(p);
  RightSelfDualReport report{.record = make_record(EpCode::torsion_space(p, n))};
  if (n > 2) return report;
  report.uniqueness_checked = true;
  std::size_t matches = 0;
  bool only_torsion_space = true;
  for (std::size_t kt = 0; kt <= n; ++kt) {
    for (const auto& t : enumerate_subspaces(p, n, kt)) {
      for (std::size_t kr = 0; kr <= kt; ++kr) {
        for (const auto& r : enumerate_subspaces(p, n, kr)) {
          if (!t.contains(r)) continue;
          const EpCode c(r, t);
          if (!by_definition::is_right_self_dual(c)) continue;
          ++matches;
          if (!(c == EpCode::torsion_space(p, n))) only_torsion_space = false;
        }
      }
    }
  }
  report.unique = matches == 1 && only_torsion_space;
  return report;
}

LowerBound ternary_lcd_lower_bound(std::size_t n) {
  LowerBound lb;
  lb.n = n;
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= i;
  lb.denominator = (n == 0 ? 1 : (std::uint64_t{1} << (n - 1))) * fact;
  for (std::size_t m = 0; m <= n; ++m) {
    std::uint64_t count = 0;
    for_each_subspace(3, n, m, [&](const FpCode& c) {
      if (is_lcd_fp(c)) ++count;
    });
    lb.phi.push_back(count);
    lb.bound += (count + lb.denominator - 1) / lb.denominator;
  }
  return lb;
}

std::string record_json(const ClassRecord& rec) { return record_object(rec).dump(); }

std::string records_jsonl(const Classification& c) {
  std::string out;
  for (const auto& rec : c.classes) {
    out += record_json(rec);
    out += '\n';
  }
  return out;
}

std::string format_text(const Classification& c) {
  std::ostringstream os;
  os << to_string(c.kind) << " codes over E_" << c.p << " of length " << c.n << ": " << c.classes.size()
     << (c.classes.size() == 1 ? " class" : " classes") << '\n';
  if (!c.note.empty()) os << "note: " << c.note << '\n';
  std::size_t idx = 0;
  for (const auto& rec : c.classes) {
    os << "class " << ++idx << ": d=";
    if (rec.d)
      os << *rec.d;
    else
      os << '-';
    os << ' ' << to_string(rec.mds_status) << " m1=" << rec.m1 << " m2=" << rec.m2;
    std::vector<std::string> flags;
    if (rec.flags.free) flags.emplace_back("free");
    if (rec.flags.lcd) flags.emplace_back("lcd");
    if (rec.flags.left_self_dual) flags.emplace_back("left-self-dual");
    if (rec.flags.right_self_dual) flags.emplace_back("right-self-dual");
    if (rec.flags.self_dual) flags.emplace_back("self-dual");
    for (std::size_t i = 0; i < flags.size(); ++i) os << (i == 0 ? " [" : ",") << flags[i];
    if (!flags.empty()) os << ']';
    os << '\n';
    std::istringstream rows(format_rows(rec.representative));
    for (std::string line; std::getline(rows, line);) os << "    " << line << '\n';
    if (rec.representative.rows().empty()) os << "    (zero code)\n";
  }
  const auto dist = c.distance_counts();
  if (!dist.empty()) {
    os << "by distance (the zero code has no distance and is not tallied):";
    for (const auto& [d, count] : dist) os << " d=" << d << ':' << count;
    os << '\n';
  }
  return os.str();
}

}  // namespace epc
