#include "lozenge/identities.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "lozenge/closed_forms.hpp"
#include "lozenge/errors.hpp"

namespace lozenge {

namespace {

Rational poch(long alpha, int k) { return pochhammer(Rational(alpha), k); }

CheckReport make_report(std::string identity, int a, int b, int c, Rational lhs, Rational rhs) {
  CheckReport r;
  r.identity = std::move(identity);
  r.a = a;
  r.b = b;
  r.c = c;
  r.pass = lhs == rhs;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

void append_detail(CheckReport& r, const std::string& msg) {
  if (!r.detail.empty()) r.detail += "; ";
  r.detail += msg;
}

Region without(const Region& g, std::initializer_list<TriCell> cells) {
  std::vector<TriCell> v(cells);
  return remove_cells(g, v);
}

Rational count_of(const RegionSpec& spec) { return engine_count(build(spec)); }

Rational pcount(int a, int b, int c) { return Rational(BigInt(proctor_count(a, b, c))); }
Rational scount(int a, int b, int c) { return Rational(BigInt(s_count(a, b, c))); }

void require_recurrence_domain(int a, int b, int c) {
  if (a < 1 || b < 2 || c < 0 || a > b)
    throw DomainError("recurrence needs 1 <= a <= b, b >= 2, c >= 0; got (" + std::to_string(a) +
                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
}

// S-side factor of the closed form, with the subscript of (c+i)_k selectable.
Rational s_closed(int a, int b, int c, bool uncorrected_subscript) {
  Rational v = poch(c + a + 2, b - a) * poch(2 * c + b + 3, a - 1) *
               Rational(long((2 * b - a + 2) * c + (b + 1) * (b + 2))) /
               (poch(a + 2, b - a + 1) * poch(b + 3, a - 1));
  for (int i = 1; i <= a; ++i) {
    const int k = uncorrected_subscript ? b - a + i : b - a + 1;
    v *= poch(c + i, k) * poch(2 * c + b - a + 1 + i, i - 1) /
         (poch(i, b - a + 1) * poch(b - a + 1 + i, i - 1));
  }
  return v;
}

// Pochhammer form of the staircase-hexagon count for parameters (A, B, C).
Rational p_closed(int A, int B, int C, int den_shift = 0) {
  Rational v(1);
  for (int i = 1; i <= A; ++i)
    v *= poch(C + i, B - A + 1) * poch(2 * C + B - A + 1 + i, i - 1) / poch(i, B - A + i + den_shift);
  return v;
}

// S-count unrolled through the recurrence down to the two base families.
class SRecursion {
 public:
  SRecursion(bool weighted) : weighted_(weighted) {}

  Rational operator()(int a, int b, int c) {
    if (a == b + 1) a = b;
    const auto key = std::make_tuple(a, b, c);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Rational v;
    if (a == 0 || (a == 1 && b == 1)) {
      v = base(a, b, c);
    } else {
      v = (p(a + 1, b, c + 1) * p(a, b, c) + p(a + 1, b + 1, c) * (*this)(a - 1, b - 2, c + 1)) /
          p(a, b - 1, c + 1);
    }
    memo_.emplace(key, v);
    return v;
  }

 private:
  Rational base(int a, int b, int c) const {
    if (weighted_) return s_prime_count(a, b, c);
    if (a == 0) return Rational(binomial(b + c + 1, b));
    return Rational(long(c + 1) * (c + 2));
  }
  Rational p(int a, int b, int c) const {
    return weighted_ ? ciucu_weighted_count(a, b, c) : pcount(a, b, c);
  }

  bool weighted_;
  std::map<std::tuple<int, int, int>, Rational> memo_;
};

Rational triple_product(int a, int b, int c) {
  Rational v(1);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j)
      for (int k = 1; k <= c; ++k) v *= Rational(long(i + j + k - 1), long(i + j + k - 2));
  return v;
}

Rational ciucu_via_pochhammer(int a, int b, int c) {
  if (a == b + 1) a = b;
  return Rational(BigInt(proctor_count_alt(a, b, c))) / Rational(pow2(a)) *
         poch(2 * c + b - a + 1, a) / poch(c + b - a + 1, a);
}

std::string family_identity(Family f) {
  switch (f) {
    case Family::Hexagon: return "macmahon";
    case Family::P: return "proctor";
    case Family::PPrime: return "ciucu";
    case Family::S: return "theorem-main";
    case Family::SPrime: return "theorem-weighted";
    case Family::STDH: return "factorization";
    case Family::Custom: break;
  }
  throw DomainError("custom regions have no closed form");
}

// Positions of `cell` in the boundary walk.
std::vector<std::size_t> positions(const std::vector<TriCell>& cycle, const TriCell& cell) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (cycle[i] == cell) out.push_back(i);
  return out;
}

bool cyclically_ordered(const std::vector<TriCell>& cycle, const KuoQuadruple& q, bool reversed) {
  const std::size_t n = cycle.size();
  auto dist = [&](std::size_t from, std::size_t to) {
    return reversed ? (from + n - to) % n : (to + n - from) % n;
  };
  for (std::size_t pt : positions(cycle, q.t))
    for (std::size_t pu : positions(cycle, q.u))
      for (std::size_t pv : positions(cycle, q.v))
        for (std::size_t pw : positions(cycle, q.w)) {
          const std::size_t du = dist(pt, pu), dv = dist(pt, pv), dw = dist(pt, pw);
          if (0 < du && du < dv && dv < dw) return true;
        }
  return false;
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j = {{"identity", identity}, {"a", a},   {"b", b},      {"c", c},
                      {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}, {"pass", pass}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

Rational engine_count(const Region& r, const EngineLimits& limits) { return count_dp(r, limits); }

void validate_quadruple(const Region& g, const KuoQuadruple& q) {
  const Orientation v1 = q.t.orient;
  if (q.u.orient != v1 || q.v.orient != v1)
    throw DomainError("Kuo quadruple: t, u, v must lie in the same colour class");
  if (q.w.orient == v1) throw DomainError("Kuo quadruple: w must lie in the other colour class");
  const std::set<TriCell> distinct{q.t, q.u, q.v, q.w};
  if (distinct.size() != 4) throw DomainError("Kuo quadruple: vertices must be distinct");
  for (const TriCell& x : distinct)
    if (!g.contains(x)) throw DomainError("Kuo quadruple: " + to_string(x) + " is not in the graph");
  const std::size_t n1 = v1 == Orientation::Up ? g.up_count() : g.down_count();
  const std::size_t n2 = g.size() - n1;
  if (n1 != n2 + 1)
    throw DomainError("Kuo quadruple: need |V1| = |V2| + 1, got " + std::to_string(n1) + " and " +
                      std::to_string(n2));
  const auto cycle = outer_boundary_cycle(g);
  if (!cyclically_ordered(cycle, q, false) && !cyclically_ordered(cycle, q, true))
    throw DomainError("Kuo quadruple: t, u, v, w do not appear in cyclic order on the outer face");
}

CheckReport check_kuo(const Region& g, const KuoQuadruple& q) {
  validate_quadruple(g, q);
  const Rational lhs = engine_count(without(g, {q.u})) * engine_count(without(g, {q.t, q.v, q.w}));
  const Rational rhs = engine_count(without(g, {q.t})) * engine_count(without(g, {q.u, q.v, q.w})) +
                       engine_count(without(g, {q.v})) * engine_count(without(g, {q.t, q.u, q.w}));
  return make_report("kuo", 0, 0, 0, lhs, rhs);
}

CheckReport check_kuo(const DualGraph& g, const KuoQuadruple& q) { return check_kuo(to_region(g), q); }

KuoQuadruple kuo_quadruple(int a, int b, int c) {
  return {up_cell(0, 0), up_cell(a, a + c), up_cell(a + 1, a + c + 1),
          down_cell(a + b + 1, a + c + 1)};
}

std::vector<KuoIdentification> kuo_identifications(int a, int b, int c) {
  const Region g = build_kuo_host(a, b, c);
  const KuoQuadruple q = kuo_quadruple(a, b, c);
  return {
      {"G-u", without(g, {q.u}), {Family::S, a, b, c}},
      {"G-{t,v,w}", without(g, {q.t, q.v, q.w}), {Family::P, a, b - 1, c + 1}},
      {"G-t", without(g, {q.t}), {Family::P, a + 1, b, c + 1}},
      {"G-{u,v,w}", without(g, {q.u, q.v, q.w}), {Family::P, a, b, c}},
      {"G-v", without(g, {q.v}), {Family::P, a + 1, b + 1, c}},
      {"G-{t,u,w}", without(g, {q.t, q.u, q.w}), {Family::S, a - 1, b - 2, c + 1}},
  };
}

CheckReport check_recurrence(int a, int b, int c, CheckMode mode) {
  require_recurrence_domain(a, b, c);
  auto formula = [&] {
    return make_report("recurrence", a, b, c, scount(a, b, c) * pcount(a, b - 1, c + 1),
                       pcount(a + 1, b, c + 1) * pcount(a, b, c) +
                           pcount(a + 1, b + 1, c) * scount(a - 1, b - 2, c + 1));
  };
  auto engine = [&] {
    const auto ids = kuo_identifications(a, b, c);
    std::vector<Rational> m;
    std::string mismatches;
    for (const auto& id : ids) {
      const Rational claimed = count_of(id.claimed);
      if (engine_count(id.literal) != claimed) {
        if (!mismatches.empty()) mismatches += ", ";
        mismatches += id.deleted;
      }
      m.push_back(claimed);
    }
    CheckReport r = make_report("recurrence", a, b, c, m[0] * m[1], m[2] * m[3] + m[4] * m[5]);
    if (!mismatches.empty()) {
      r.pass = false;
      append_detail(r, "identification failed for " + mismatches);
    }
    return r;
  };
  if (mode == CheckMode::Formula) return formula();
  if (mode == CheckMode::Engine) return engine();
  CheckReport f = formula();
  CheckReport e = engine();
  if (!f.pass) append_detail(e, "formula mode failed");
  if (f.lhs != e.lhs || f.rhs != e.rhs) append_detail(e, "formula and engine values differ");
  e.pass = e.pass && f.pass && f.lhs == e.lhs && f.rhs == e.rhs;
  return e;
}

CheckReport check_weighted_recurrence(int a, int b, int c) {
  require_recurrence_domain(a, b, c);
  return make_report(
      "recurrence-weighted", a, b, c,
      s_prime_count(a, b, c) * ciucu_weighted_count(a, b - 1, c + 1),
      ciucu_weighted_count(a + 1, b, c + 1) * ciucu_weighted_count(a, b, c) +
          ciucu_weighted_count(a + 1, b + 1, c) * s_prime_count(a - 1, b - 2, c + 1));
}

std::pair<Rational, Rational> bigrec_sides(int a, int b, int c, BigrecVariant variant) {
  const bool uncorrected = variant == BigrecVariant::Uncorrected;
  const Rational lhs = s_closed(a, b, c, uncorrected) * p_closed(a, b - 1, c + 1, uncorrected ? 2 : 0);
  const Rational rhs = p_closed(a + 1, b, c + 1) * p_closed(a, b, c) +
                       p_closed(a + 1, b + 1, c) * s_closed(a - 1, b - 2, c + 1, false);
  return {lhs, rhs};
}

CheckReport check_bigrec(int a, int b, int c) {
  if (a < 1 || b < 2 || c < 0)
    throw DomainError("bigrec needs a >= 1, b >= 2, c >= 0");
  auto [lhs, rhs] = bigrec_sides(a, b, c, BigrecVariant::Resolved);
  return make_report("bigrec", a, b, c, lhs, rhs);
}

SplitCut make_cut(const Region& g, std::vector<TriCell> h, Orientation v1) {
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  SplitCut cut;
  cut.v1 = v1;
  for (const TriCell& x : g.cells())
    if (!std::binary_search(h.begin(), h.end(), x)) cut.complement.push_back(x);
  cut.h = std::move(h);
  return cut;
}

CheckReport check_graph_splitting(const Region& g, const SplitCut& cut) {
  std::vector<TriCell> h = cut.h, rest = cut.complement;
  std::sort(h.begin(), h.end());
  std::sort(rest.begin(), rest.end());
  std::vector<TriCell> both;
  std::set_intersection(h.begin(), h.end(), rest.begin(), rest.end(), std::back_inserter(both));
  if (!both.empty()) throw DomainError("cut: " + to_string(both.front()) + " lies on both sides");
  std::vector<TriCell> all;
  std::merge(h.begin(), h.end(), rest.begin(), rest.end(), std::back_inserter(all));
  if (all != g.cells()) throw DomainError("cut: H and its complement do not partition the graph");

  std::size_t h1 = 0;
  for (const TriCell& x : h) {
    if (x.orient != cut.v1) continue;
    ++h1;
    for (const TriCell& y : neighbors(x))
      if (std::binary_search(rest.begin(), rest.end(), y))
        throw SplitConditionError("Separating condition violated: " + to_string(x) + " in H is adjacent to " +
                                  to_string(y) + " in G-H");
  }
  if (h1 != h.size() - h1)
    throw SplitConditionError("Balancing condition violated: |V(H) ∩ V1| = " + std::to_string(h1) +
                              " but |V(H) ∩ V2| = " + std::to_string(h.size() - h1));

  const Region hr = remove_cells(g, rest);
  const Region gr = remove_cells(g, h);
  return make_report("splitting", 0, 0, 0, engine_count(g), engine_count(hr) * engine_count(gr));
}

CheckReport check_graph_splitting(const DualGraph& g, const SplitCut& cut) {
  return check_graph_splitting(to_region(g), cut);
}

SplitCut s11_top_rows_cut(int c) {
  const Region s = build_S(1, 1, c);
  std::vector<TriCell> top;
  for (const TriCell& x : s.cells())
    if (x.row < 2) top.push_back(x);
  return make_cut(s, std::move(top), Orientation::Down);
}

CheckReport check_factorization(int a, int b, int c) {
  validate({Family::STDH, a, b, c});
  return make_report("factorization", a, b, c, engine_count(build_STDH(a, b, c)),
                     Rational(pow2(a + 1)) * engine_count(build_S_prime(a, b, c)) *
                         engine_count(build_S(a, b - 1, c)));
}

CheckReport check_stdh_integrality(int a, int b, int c) {
  validate({Family::STDH, a, b, c});
  const Rational v = Rational(pow2(a + 1)) * s_prime_count(a, b, c) * scount(a, b - 1, c);
  const BigInt whole = v.numerator() / v.denominator();
  CheckReport r = make_report("factorization", a, b, c, v, Rational(whole));
  if (!r.pass) r.detail = "not an integer";
  return r;
}

std::vector<CheckReport> check_base_cases(int max_bc) {
  std::vector<CheckReport> out;
  for (int b = 0; b <= max_bc; ++b)
    for (int c = 0; c <= max_bc; ++c) {
      const Rational closed(binomial(b + c + 1, b));
      CheckReport r = make_report("base-cases", 0, b, c, engine_count(build_S(0, b, c)), closed);
      if (scount(0, b, c) != closed) {
        r.pass = false;
        r.detail = "s_count differs from the binomial";
      }
      out.push_back(std::move(r));
    }
  for (int c = 0; c <= max_bc; ++c) {
    const Rational closed(long(c + 1) * (c + 2));
    CheckReport r = make_report("base-cases", 1, 1, c, engine_count(build_S(1, 1, c)), closed);
    if (scount(1, 1, c) != closed) {
      r.pass = false;
      r.detail = "s_count differs from (c+1)(c+2)";
    }
    out.push_back(std::move(r));
  }
  return out;
}

CheckReport check_family(Family family, int a, int b, int c, CheckMode mode) {
  const RegionSpec spec{family, a, b, c};
  validate(spec);
  const std::string id = family_identity(family);
  auto formula = [&] {
    Rational alt;
    switch (family) {
      case Family::Hexagon: alt = triple_product(a, b, c); break;
      case Family::P: alt = Rational(BigInt(proctor_count_alt(a, b, c))); break;
      case Family::PPrime: alt = ciucu_via_pochhammer(a, b, c); break;
      case Family::S: alt = SRecursion(false)(a, b, c); break;
      case Family::SPrime: alt = SRecursion(true)(a, b, c); break;
      default: throw DomainError(id + " has no formula mode");
    }
    return make_report(id, a, b, c, formula_value(spec), alt);
  };
  auto engine = [&] { return make_report(id, a, b, c, engine_count(build(spec)), formula_value(spec)); };
  if (mode == CheckMode::Formula) return formula();
  if (mode == CheckMode::Engine) return engine();
  CheckReport e = engine();
  if (family != Family::STDH) {
    const CheckReport f = formula();
    if (!f.pass) {
      e.pass = false;
      append_detail(e, "formula routes disagree: " + f.lhs.to_string() + " vs " + f.rhs.to_string());
    }
  }
  return e;
}

std::vector<Triple> grid(int a0, int a1, int b0, int b1, int c0, int c1,
                         const std::function<bool(const Triple&)>& keep) {
  std::vector<Triple> out;
  for (int a = a0; a <= a1; ++a)
    for (int b = b0; b <= b1; ++b)
      for (int c = c0; c <= c1; ++c)
        if (!keep || keep({a, b, c})) out.push_back({a, b, c});
  return out;
}

std::vector<CheckReport> run_grid(const std::vector<Triple>& tuples,
                                  const std::function<CheckReport(const Triple&)>& check,
                                  const std::string& identity, unsigned threads) {
  std::vector<CheckReport> out(tuples.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tuples.size(); i = next++) {
      const Triple& t = tuples[i];
      try {
        out[i] = check(t);
      } catch (const LimitExceeded&) {
        throw;
      } catch (const std::exception& e) {
        CheckReport r;
        r.identity = identity;
        r.a = t.a;
        r.b = t.b;
        r.c = t.c;
        r.detail = e.what();
        out[i] = std::move(r);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, tuples.size()));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (unsigned k = 0; k < threads; ++k)
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tuples.size();
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace lozenge
