#include "tlkh/homology.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tlkh {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

BigradedGroup homology_impl(const ZComplex& z, bool windowed, int q_lo, int q_hi) {
  BigradedGroup out;
  for (const auto& [q, by_h] : z.gens) {
    if (windowed && (q < q_lo || q > q_hi)) continue;
    const auto mats = z.diff.find(q);
    std::map<int, SnfResult> snf_cache;
    auto snf_at = [&](int h) -> const SnfResult& {
      auto it = snf_cache.find(h);
      if (it != snf_cache.end()) return it->second;
      SnfResult r;
      if (mats != z.diff.end()) {
        auto mit = mats->second.find(h);
        if (mit != mats->second.end()) r = smith_normal_form(mit->second);
      }
      return snf_cache.emplace(h, std::move(r)).first->second;
    };
    for (const auto& [h, gen_list] : by_h) {
      const SnfResult& leaving = snf_at(h);
      const SnfResult& entering = snf_at(h - 1);
      HomologyGroup g;
      g.free_rank = static_cast<long long>(gen_list.size()) - leaving.rank - entering.rank;
      for (const Int& inv : entering.invariants)
        if (inv > 1)
          for (Int pk : prime_power_factors(inv)) g.torsion.push_back(std::move(pk));
      std::sort(g.torsion.begin(), g.torsion.end());
      if (!g.trivial()) out.entries[{h, q}] = std::move(g);
    }
  }
  return out;
}

}  // namespace

std::vector<Int> prime_power_factors(Int n) {
  if (n <= 1) throw std::invalid_argument("prime_power_factors: argument must be > 1");
  std::vector<Int> out;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    Int pk = 1;
    while (n % p == 0) {
      n /= p;
      pk *= p;
    }
    out.push_back(pk);
  }
  if (n > 1) out.push_back(n);
  std::sort(out.begin(), out.end());
  return out;
}

BigradedGroup homology(const ZComplex& z) { return homology_impl(z, false, 0, 0); }

BigradedGroup homology(const ZComplex& z, int q_lo, int q_hi) {
  return homology_impl(z, true, q_lo, q_hi);
}

BigradedGroup homology(const Complex& c) {
  if (c.bottom() != 0 || c.top() != 0)
    throw std::invalid_argument(
        "homology: complex has boundary; pair it against a diagram and use the "
        "integer-complex overload");
  return homology(hom_complex(Complex::single(FlatTangle::identity(0)), c));
}

BigradedGroup restricted(const BigradedGroup& g, int q_lo, int q_hi) {
  BigradedGroup out;
  for (const auto& [key, grp] : g.entries)
    if (key.second >= q_lo && key.second <= q_hi) out.entries.emplace(key, grp);
  return out;
}

BigradedGroup shifted(const BigradedGroup& g, int di, int dq) {
  BigradedGroup out;
  for (const auto& [key, grp] : g.entries)
    out.entries.emplace(std::pair{key.first + di, key.second + dq}, grp);
  return out;
}

std::map<std::pair<int, int>, Int> poincare(const BigradedGroup& h, int p) {
  if (p != 0 && !is_prime(p)) throw std::invalid_argument("poincare: p must be 0 or prime");
  std::map<std::pair<int, int>, Int> out;
  for (const auto& [iq, g] : h.entries) {
    auto [i, q] = iq;
    Int dim = g.free_rank;
    if (p != 0) {
      Int tor = 0;
      for (const Int& pk : g.torsion)
        if (pk % p == 0) ++tor;
      dim += tor;
      // universal coefficients: Tor(H^i, F_p) feeds the degree below
      if (tor != 0) out[{i - 1, q}] += tor;
    }
    if (dim != 0) out[{i, q}] += dim;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Laurent euler_characteristic(const BigradedGroup& h) {
  Laurent out;
  for (const auto& [iq, g] : h.entries) {
    Int c = (iq.first % 2 == 0) ? Int(g.free_rank) : Int(-g.free_rank);
    out += Laurent::monomial(c, iq.second);
  }
  return out;
}

std::string BigradedGroup::to_json() const {
  std::map<int, std::map<int, const HomologyGroup*>> by_q;
  for (const auto& [iq, g] : entries) by_q[iq.second][iq.first] = &g;
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  for (const auto& [q, by_i] : by_q) {
    nlohmann::ordered_json qobj = nlohmann::ordered_json::object();
    for (const auto& [i, g] : by_i) {
      nlohmann::ordered_json e = nlohmann::ordered_json::object();
      e["free"] = g->free_rank;
      nlohmann::ordered_json tor = nlohmann::ordered_json::array();
      for (const Int& t : g->torsion) tor.push_back(t.convert_to<long long>());
      e["torsion"] = std::move(tor);
      qobj[std::to_string(i)] = std::move(e);
    }
    root[std::to_string(q)] = std::move(qobj);
  }
  return root.dump();
}

}  // namespace tlkh
