#include "weyl/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace weyl {

char family_char(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family family_from_char(char c) {
  switch (c) {
    case 'A': case 'a': return Family::A;
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

IntVec apply_matrix(const IntMat& m, const IntVec& v) {
  std::size_t n = m.size();
  if (v.size() != n) throw std::invalid_argument("apply_matrix: dimension mismatch");
  IntVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size();
  IntMat out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      long aik = a[i][k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += aik * b[k][j];
    }
  return out;
}

IntMat identity_matrix(int n) {
  IntMat m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

namespace {

Rational dot(const RatVec& a, const RatVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer pow2(int n) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
  return p;
}

}  // namespace

RootSystemData build_root_system(RootSystemType t) {
  RootSystemData d;
  d.family = t.family;
  d.rank = t.rank;
  int r = t.rank;

  auto basis_vec = [](int dim, int i, long v = 1) {
    RatVec e(dim, Rational(0));
    e[i] = Rational(v);
    return e;
  };

  switch (t.family) {
    case Family::A: {
      if (r < 1) throw std::out_of_range("type A requires rank >= 1");
      int n = r + 1;
      d.ambient = n;
      for (int i = 0; i < r; ++i) {
        RatVec rho(n, Rational(0));
        rho[i] = 1;
        rho[i + 1] = -1;
        d.simple_roots.push_back(rho);
        RatVec w(n, Rational(0));
        for (int j = 0; j <= i; ++j) w[j] = 1;
        for (int j = 0; j < n; ++j) w[j] -= Rational(i + 1, n);
        d.fundamental_weights.push_back(w);
      }
      d.highest_root = RatVec(n, Rational(0));
      d.highest_root[0] = 1;
      d.highest_root[n - 1] = -1;
      d.group_order = factorial(n);
      break;
    }
    case Family::B: {
      if (r < 2) throw std::out_of_range("type B requires rank >= 2");
      d.ambient = r;
      for (int i = 0; i < r; ++i) {
        RatVec rho(r, Rational(0));
        if (i < r - 1) {
          rho[i] = 1;
          rho[i + 1] = -1;
        } else {
          rho[i] = 1;
        }
        d.simple_roots.push_back(rho);
        RatVec w(r, Rational(0));
        for (int j = 0; j <= i; ++j) w[j] = 1;
        if (i == r - 1)
          for (int j = 0; j < r; ++j) w[j] = Rational(1, 2);
        d.fundamental_weights.push_back(w);
      }
      d.highest_root = basis_vec(r, 0);
      d.highest_root[1] = 1;
      d.group_order = pow2(r) * factorial(r);
      break;
    }
    case Family::C: {
      if (r < 1) throw std::out_of_range("type C requires rank >= 1");
      d.ambient = r;
      for (int i = 0; i < r; ++i) {
        RatVec rho(r, Rational(0));
        if (i < r - 1) {
          rho[i] = 1;
          rho[i + 1] = -1;
        } else {
          rho[i] = 2;
        }
        d.simple_roots.push_back(rho);
        RatVec w(r, Rational(0));
        for (int j = 0; j <= i; ++j) w[j] = 1;
        d.fundamental_weights.push_back(w);
      }
      d.highest_root = basis_vec(r, 0, 2);
      d.group_order = pow2(r) * factorial(r);
      break;
    }
    case Family::D: {
      if (r < 3) throw std::out_of_range("type D requires rank >= 3");
      d.ambient = r;
      for (int i = 0; i < r; ++i) {
        RatVec rho(r, Rational(0));
        if (i < r - 1) {
          rho[i] = 1;
          rho[i + 1] = -1;
        } else {
          rho[r - 2] = 1;
          rho[r - 1] = 1;
        }
        d.simple_roots.push_back(rho);
        RatVec w(r, Rational(0));
        if (i < r - 2) {
          for (int j = 0; j <= i; ++j) w[j] = 1;
        } else if (i == r - 2) {
          for (int j = 0; j < r; ++j) w[j] = Rational(1, 2);
          w[r - 1] = Rational(-1, 2);
        } else {
          for (int j = 0; j < r; ++j) w[j] = Rational(1, 2);
        }
        d.fundamental_weights.push_back(w);
      }
      d.highest_root = basis_vec(r, 0);
      d.highest_root[1] = 1;
      d.group_order = pow2(r - 1) * factorial(r);
      break;
    }
  }

  // Cartan matrix 2<rho_i, rho_j>/<rho_j, rho_j>; entries must be integers.
  d.cartan.assign(r, std::vector<long>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rational c = Rational(2) * dot(d.simple_roots[i], d.simple_roots[j]) /
                   dot(d.simple_roots[j], d.simple_roots[j]);
      if (!c.is_integer()) throw std::logic_error("non-integer Cartan entry");
      d.cartan[i][j] = c.numerator().get_si();
    }

  // Reflection s_j in the weight basis: identity with column j replaced by
  // e_j minus the j-th Cartan row.
  for (int j = 0; j < r; ++j) {
    IntMat m = identity_matrix(r);
    for (int k = 0; k < r; ++k) m[k][j] -= d.cartan[j][k];
    d.generators.push_back(std::move(m));
  }

  d.weight_matrix.assign(d.ambient, RatVec(r, Rational(0)));
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < d.ambient; ++a) d.weight_matrix[a][i] = d.fundamental_weights[i][a];

  d.gram.assign(r, RatVec(r, Rational(0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      d.gram[i][j] = dot(d.fundamental_weights[i], d.fundamental_weights[j]);

  d.chamber_functional.assign(r, Rational(0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) d.chamber_functional[i] += d.gram[i][j];

  return d;
}

RatVec weight_vector(const RootSystemData& d, const IntVec& alpha) {
  if (static_cast<int>(alpha.size()) != d.rank)
    throw std::invalid_argument("weight_vector: wrong arity");
  RatVec v(d.ambient, Rational(0));
  for (int i = 0; i < d.rank; ++i)
    for (int a = 0; a < d.ambient; ++a)
      v[a] += Rational(alpha[i]) * d.fundamental_weights[i][a];
  return v;
}

Rational chamber_height(const RootSystemData& d, const IntVec& alpha) {
  Rational h = 0;
  for (int i = 0; i < d.rank; ++i) h += Rational(alpha[i]) * d.chamber_functional[i];
  return h;
}

std::vector<IntVec> orbit(const RootSystemData& d, const IntVec& alpha, std::size_t cap) {
  if (static_cast<int>(alpha.size()) != d.rank)
    throw std::invalid_argument("orbit: wrong arity");
  std::set<IntVec> seen{alpha};
  std::deque<IntVec> queue{alpha};
  while (!queue.empty()) {
    IntVec v = std::move(queue.front());
    queue.pop_front();
    for (const IntMat& g : d.generators) {
      IntVec w = apply_matrix(g, v);
      if (seen.insert(w).second) {
        if (seen.size() > cap) throw ResourceError("orbit cap exceeded");
        queue.push_back(std::move(w));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::pair<IntVec, int>> signed_orbit(const RootSystemData& d, const IntVec& alpha,
                                                 std::size_t cap) {
  std::map<IntVec, int> sign{{alpha, 1}};
  std::deque<IntVec> queue{alpha};
  while (!queue.empty()) {
    IntVec v = std::move(queue.front());
    queue.pop_front();
    int s = sign.at(v);
    for (const IntMat& g : d.generators) {
      IntVec w = apply_matrix(g, v);
      auto [it, inserted] = sign.emplace(w, -s);
      if (inserted) {
        if (sign.size() > cap) throw ResourceError("orbit cap exceeded");
        queue.push_back(std::move(w));
      } else if (it->second != -s) {
        return {};  // stabilizer contains a reflection
      }
    }
  }
  return {sign.begin(), sign.end()};
}

bool is_dominant(const IntVec& alpha) {
  return std::all_of(alpha.begin(), alpha.end(), [](long a) { return a >= 0; });
}

IntVec dominant_representative(const RootSystemData& d, IntVec alpha) {
  // Reflecting at a negative coordinate strictly increases the chamber
  // functional, so this terminates.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < d.rank; ++i) {
      if (alpha[i] < 0) {
        alpha = apply_matrix(d.generators[i], alpha);
        moved = true;
      }
    }
  }
  return alpha;
}

Integer orbit_size(const RootSystemData& d, const IntVec& alpha) {
  return Integer(static_cast<long>(orbit(d, alpha).size()));
}

Integer stabilizer_order(const RootSystemData& d, const IntVec& alpha) {
  Integer n = orbit_size(d, alpha);
  Integer q = d.group_order / n;
  if (q * n != d.group_order) throw std::logic_error("orbit size does not divide group order");
  return q;
}

GroupRep enumerate_group(const RootSystemData& d, std::size_t cap) {
  GroupRep rep;
  rep.generators = d.generators;
  std::map<IntMat, int> seen;
  IntMat id = identity_matrix(d.rank);
  seen.emplace(id, 1);
  std::deque<IntMat> queue{id};
  while (!queue.empty()) {
    IntMat m = std::move(queue.front());
    queue.pop_front();
    int s = seen.at(m);
    for (const IntMat& g : d.generators) {
      IntMat p = mat_mul(g, m);
      if (seen.emplace(p, -s).second) {
        if (seen.size() > cap) throw ResourceError("group enumeration cap exceeded");
        queue.push_back(std::move(p));
      }
    }
  }
  rep.order = Integer(static_cast<long>(seen.size()));
  if (rep.order != d.group_order) throw std::logic_error("enumerated group has wrong order");
  rep.elements.assign(seen.begin(), seen.end());
  return rep;
}

}  // namespace weyl
