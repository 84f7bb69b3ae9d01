#include "weyl/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace weyl {

LaurentPoly LaurentPoly::constant(int nvars, Rational c) {
  LaurentPoly p(nvars);
  p.add_term(IntVec(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, IntVec exp, Rational c) {
  LaurentPoly p(nvars);
  p.add_term(exp, c);
  return p;
}

Rational LaurentPoly::coefficient(const IntVec& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const IntVec& exp, const Rational& c) {
  if (static_cast<int>(exp.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::add_term: arity mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("LaurentPoly: arity mismatch");
  LaurentPoly out(a.nvars_);
  IntVec e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly p(nvars_);
  if (c.is_zero()) return p;
  for (const auto& [e, coef] : terms_) p.terms_.emplace(e, coef * c);
  return p;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
  LaurentPoly acc = constant(nvars_, Rational(1));
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1) acc = acc * base;
    if (k >>= 1) base = base * base;
  }
  return acc;
}

LaurentPoly LaurentPoly::euler_derivative(int i) const {
  LaurentPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    p.terms_.emplace(e, c * Rational(e[i]));
  }
  return p;
}

LaurentPoly LaurentPoly::hat() const {
  LaurentPoly p(nvars_);
  for (const auto& [e, c] : terms_) {
    IntVec neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    p.terms_.emplace(std::move(neg), c);
  }
  return p;
}

GaussianRational LaurentPoly::eval(const std::vector<CirclePoint>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::eval: arity mismatch");
  GaussianRational sum{Rational(0)};
  for (const auto& [e, c] : terms_) {
    GaussianRational m{c};
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) m *= circle_pow(x[i], e[i]).value();
    sum += m;
  }
  return sum;
}

ComplexFloat LaurentPoly::eval_c(const std::vector<ComplexFloat>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("LaurentPoly::eval_c: arity mismatch");
  ComplexFloat sum = 0.0;
  for (const auto& [e, c] : terms_) {
    ComplexFloat m = c.to_double();
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      m *= std::pow(x[i], e[i]);
    }
    sum += m;
  }
  return sum;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    first = false;
    bool any_var = std::any_of(e.begin(), e.end(), [](long k) { return k != 0; });
    if (!any_var || coef != Rational(1)) os << coef.to_string();
    bool star = !any_var || coef != Rational(1);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (star) os << "*";
      os << var << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
      star = true;
    }
  }
  return os.str();
}

LaurentPoly act(const IntMat& b, const LaurentPoly& f) {
  if (static_cast<int>(b.size()) != f.nvars())
    throw std::invalid_argument("act: dimension mismatch");
  LaurentPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) out.add_term(apply_matrix(b, e), c);
  return out;
}

bool is_invariant(const RootSystemData& d, const LaurentPoly& f) {
  return std::all_of(d.generators.begin(), d.generators.end(),
                     [&](const IntMat& g) { return act(g, f) == f; });
}

LaurentPoly orbit_polynomial(const RootSystemData& d, const IntVec& alpha, std::size_t cap) {
  auto orb = orbit(d, alpha, cap);
  Rational c(1, static_cast<long>(orb.size()));
  LaurentPoly p(d.rank);
  for (auto& e : orb) p.add_term(e, c);
  return p;
}

std::vector<LaurentPoly> fundamental_invariants(const RootSystemData& d) {
  std::vector<LaurentPoly> thetas;
  thetas.reserve(d.rank);
  for (int i = 0; i < d.rank; ++i) {
    IntVec e(d.rank, 0);
    e[i] = 1;
    thetas.push_back(orbit_polynomial(d, e));
  }
  return thetas;
}

LaurentPoly anti_invariant(const RootSystemData& d, const IntVec& alpha, std::size_t cap) {
  LaurentPoly p(d.rank);
  for (auto& [e, s] : signed_orbit(d, alpha, cap)) p.add_term(e, Rational(s));
  return p;
}

std::vector<int> conjugation_permutation(const RootSystemData& d) {
  std::vector<int> sigma(d.rank, -1);
  for (int i = 0; i < d.rank; ++i) {
    IntVec e(d.rank, 0);
    e[i] = -1;
    IntVec dom = dominant_representative(d, e);
    int hits = 0;
    for (int j = 0; j < d.rank; ++j) {
      if (dom[j] == 1) {
        sigma[i] = j;
        ++hits;
      } else if (dom[j] != 0) {
        hits = -d.rank;
      }
    }
    if (hits != 1) throw std::logic_error("conjugation_permutation: -w_i is not a unit vector");
  }
  return sigma;
}

InvariantExpansion orbit_product_expand(const RootSystemData& d, const IntVec& alpha,
                                        const IntVec& beta, std::size_t cap) {
  auto orb = orbit(d, beta, cap);
  Rational c(1, static_cast<long>(orb.size()));
  InvariantExpansion out;
  IntVec sum(d.rank);
  for (const auto& bt : orb) {
    for (int i = 0; i < d.rank; ++i) sum[i] = alpha[i] + bt[i];
    IntVec dom = dominant_representative(d, sum);
    auto [it, inserted] = out.emplace(std::move(dom), c);
    if (!inserted) it->second += c;
  }
  return out;
}

InvariantExpansion collect_orbits(const RootSystemData& d, const LaurentPoly& f) {
  InvariantExpansion out;
  for (const auto& [e, c] : f.terms()) {
    if (!is_dominant(e)) continue;
    out.emplace(e, c * Rational(orbit_size(d, e)));
  }
  return out;
}

namespace {

// Leading-term order for the rewriting loop: chamber functional first
// (strictly decreasing along positive-root subtractions), lexicographic
// tie-break for determinism.
struct LeadKey {
  Rational height;
  const IntVec* exp;
};

bool lead_less(const LeadKey& a, const LeadKey& b) {
  if (a.height != b.height) return a.height < b.height;
  return *a.exp < *b.exp;
}

const IntVec* leading_exponent(const RootSystemData& d, const LaurentPoly& f) {
  const IntVec* best = nullptr;
  Rational best_h;
  for (const auto& [e, c] : f.terms()) {
    Rational h = chamber_height(d, e);
    if (best == nullptr || lead_less({best_h, best}, {h, &e})) {
      best = &e;
      best_h = h;
    }
  }
  return best;
}

}  // namespace

namespace {

// Orbit-basis expansions of monomials in the fundamental invariants,
// theta^mu = sum_nu t_nu orb_nu, memoized per family. Built by repeated
// multiplication with a single theta_i through the product recurrence
// |orbit(e_i)| orb_nu orb_{e_i} = sum orb_{dominant(nu + beta)}.
class ThetaPowerCache {
 public:
  const InvariantExpansion& get(const RootSystemData& d, const IntVec& mu) {
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
    InvariantExpansion exp;
    if (std::all_of(mu.begin(), mu.end(), [](long v) { return v == 0; })) {
      exp.emplace(IntVec(d.rank, 0), Rational(1));
    } else {
      int i = 0;
      while (mu[i] == 0) ++i;
      IntVec prev = mu;
      prev[i] -= 1;
      const InvariantExpansion& base = get(d, prev);
      const auto& orb = unit_orbit(d, i);
      Rational c(1, static_cast<long>(orb.size()));
      IntVec sum(d.rank);
      for (const auto& [nu, t] : base) {
        Rational tc = t * c;
        for (const auto& beta : orb) {
          for (int k = 0; k < d.rank; ++k) sum[k] = nu[k] + beta[k];
          IntVec dom = dominant_representative(d, sum);
          auto [it2, inserted] = exp.emplace(std::move(dom), tc);
          if (!inserted) it2->second += tc;
        }
      }
    }
    return cache_.emplace(mu, std::move(exp)).first->second;
  }

 private:
  const std::vector<IntVec>& unit_orbit(const RootSystemData& d, int i) {
    if (unit_orbits_.empty()) unit_orbits_.resize(d.rank);
    if (unit_orbits_[i].empty()) {
      IntVec e(d.rank, 0);
      e[i] = 1;
      unit_orbits_[i] = orbit(d, e);
    }
    return unit_orbits_[i];
  }

  std::map<IntVec, InvariantExpansion> cache_;
  std::vector<std::vector<IntVec>> unit_orbits_;
};

// one lock guards both the cache map and the cached expansions
std::mutex& theta_cache_mutex() {
  static std::mutex m;
  return m;
}

ThetaPowerCache& theta_power_cache(const RootSystemData& d) {
  static std::map<std::pair<int, int>, ThetaPowerCache> caches;
  return caches[{static_cast<int>(d.family), d.rank}];
}

}  // namespace

MPoly rewrite_in_fundamental(const RootSystemData& d, const LaurentPoly& f,
                             std::size_t iteration_cap) {
  if (!is_invariant(d, f))
    throw std::invalid_argument("rewrite_in_fundamental: input is not invariant");
  std::lock_guard<std::mutex> lock(theta_cache_mutex());
  ThetaPowerCache& cache = theta_power_cache(d);

  InvariantExpansion work = collect_orbits(d, f);
  MPoly p(d.rank);
  for (std::size_t iter = 0; iter < iteration_cap; ++iter) {
    if (work.empty()) return p;
    // leading dominant exponent under (chamber functional, lex)
    auto best = work.begin();
    Rational best_h = chamber_height(d, best->first);
    for (auto it = std::next(work.begin()); it != work.end(); ++it) {
      Rational h = chamber_height(d, it->first);
      if (h > best_h || (h == best_h && it->first > best->first)) {
        best = it;
        best_h = h;
      }
    }
    IntVec mu = best->first;
    Rational a = best->second;
    const InvariantExpansion& theta_mu = cache.get(d, mu);
    Rational scale = a / theta_mu.at(mu);
    p.add_term(std::vector<int>(mu.begin(), mu.end()), scale);
    for (const auto& [nu, t] : theta_mu) {
      auto [it, inserted] = work.emplace(nu, -(scale * t));
      if (!inserted) {
        it->second -= scale * t;
        if (it->second.is_zero()) work.erase(it);
      } else if (it->second.is_zero()) {
        work.erase(it);
      }
    }
  }
  throw std::logic_error("rewrite_in_fundamental: iteration cap exceeded");
}

InvariantExpansion expand_in_orbit_basis(const RootSystemData& d, const MPoly& p) {
  if (p.nvars() != d.rank) throw std::invalid_argument("expand_in_orbit_basis: arity");
  std::lock_guard<std::mutex> lock(theta_cache_mutex());
  ThetaPowerCache& cache = theta_power_cache(d);
  InvariantExpansion out;
  for (const auto& [e, c] : p.terms()) {
    IntVec mu(e.begin(), e.end());
    for (const auto& [nu, t] : cache.get(d, mu)) {
      auto [it, inserted] = out.emplace(nu, c * t);
      if (!inserted) {
        it->second += c * t;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

LaurentPoly expand_in_fundamental(const RootSystemData& d, const MPoly& p) {
  if (p.nvars() != d.rank) throw std::invalid_argument("expand_in_fundamental: arity");
  std::vector<LaurentPoly> thetas = fundamental_invariants(d);
  LaurentPoly out(d.rank);
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly m = LaurentPoly::constant(d.rank, c);
    for (int i = 0; i < d.rank; ++i)
      if (e[i] > 0) m = m * thetas[i].pow(e[i]);
    out += m;
  }
  return out;
}

LaurentPoly divide_exact(const RootSystemData& d, const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  LaurentPoly q(f.nvars());
  LaurentPoly r = f;
  const IntVec* gl = leading_exponent(d, g);
  IntVec glead = *gl;
  Rational gcoef = g.coefficient(glead);
  std::size_t guard = 1000000;
  for (std::size_t iter = 0; iter < guard; ++iter) {
    if (r.is_zero()) return q;
    const IntVec* rl = leading_exponent(d, r);
    IntVec diff(r.nvars());
    for (int i = 0; i < r.nvars(); ++i) diff[i] = (*rl)[i] - glead[i];
    Rational coef = r.coefficient(*rl) / gcoef;
    LaurentPoly t = LaurentPoly::monomial(r.nvars(), diff, coef);
    q += t;
    r -= t * g;
  }
  throw std::logic_error("divide_exact: no exact quotient found");
}

}  // namespace weyl
