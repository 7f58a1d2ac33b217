#include "cayley/twistsys.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cayley::twisted {

using roots::RootSystem;
using roots::RootVec;
using roots::Series;
using roots::WeylWord;
using roots::simple_root;
using roots::root_str;

std::string twisted_name(const Twisted& t) {
  switch (t.kind) {
    case Kind::A_odd: return "A1_" + std::to_string(2 * t.n - 1);
    case Kind::A_even: return "A1_" + std::to_string(2 * t.n);
    case Kind::D: return "D1_" + std::to_string(t.n);
  }
  return "?";
}

int min_n(Kind k) { return k == Kind::D ? 4 : 3; }

roots::Series underlying(const Twisted& t) {
  if (t.n < min_n(t.kind))
    throw std::invalid_argument("twisted rank parameter too small for " +
                                twisted_name(t));
  switch (t.kind) {
    case Kind::A_odd: return {roots::Family::A, 2 * t.n - 1};
    case Kind::A_even: return {roots::Family::A, 2 * t.n};
    case Kind::D: return {roots::Family::D, t.n};
  }
  throw std::invalid_argument("bad twisted kind");
}

std::vector<int> diagram_automorphism(const Twisted& t) {
  const Series s = underlying(t);
  const int l = s.rank;
  std::vector<int> rho(l + 1);
  for (int i = 1; i <= l; ++i) rho[i] = i;
  if (t.kind == Kind::D) {
    rho[1] = 2;
    rho[2] = 1;
  } else {
    for (int i = 1; i <= l; ++i) rho[i] = l + 1 - i;
  }
  // involution preserving the Cartan matrix
  const auto C = roots::cartan_matrix(s);
  for (int i = 1; i <= l; ++i) {
    if (rho[rho[i]] != i) throw std::runtime_error("rho is not an involution");
    for (int j = 1; j <= l; ++j)
      if (C.at(rho[i], rho[j]) != C.at(i, j))
        throw std::runtime_error("rho does not preserve the diagram");
  }
  return rho;
}

RootVec tau_apply(const std::vector<int>& rho, const RootVec& v) {
  RootVec out(v.size(), 0);
  for (std::size_t i = 1; i <= v.size(); ++i)
    out[rho[i] - 1] = v[i - 1];
  return out;
}

std::vector<FundamentalSet> fundamental_sets(const Twisted& t) {
  const Series s = underlying(t);
  const int l = s.rank;
  const int n = t.n;
  std::vector<FundamentalSet> out;
  auto single = [&](int idx, int r) {
    out.push_back({FundamentalSet::Kind::single, idx, {simple_root(l, r)}});
  };
  auto pair = [&](int idx, int r, int rbar) {
    out.push_back({FundamentalSet::Kind::pair,
                   idx,
                   {simple_root(l, r), simple_root(l, rbar)}});
  };
  switch (t.kind) {
    case Kind::A_odd:
      for (int i = 1; i <= n - 1; ++i) pair(i, i, 2 * n - i);
      single(n, n);
      break;
    case Kind::D:
      pair(1, 1, 2);
      for (int i = 2; i <= n - 1; ++i) single(i, i + 1);
      break;
    case Kind::A_even: {
      FundamentalSet z1{FundamentalSet::Kind::triple,
                        1,
                        {simple_root(l, n), simple_root(l, n + 1),
                         roots::add(simple_root(l, n), simple_root(l, n + 1))}};
      out.push_back(std::move(z1));
      for (int i = 2; i <= n; ++i) pair(i, n + 1 - i, n + i);
      break;
    }
  }

  // structural sanity: pair sums avoid the root set, triple sums are roots
  const RootSystem rs(s);
  const auto rho = diagram_automorphism(t);
  for (const auto& z : out) {
    if (z.kind == FundamentalSet::Kind::single) {
      if (tau_apply(rho, z.members[0]) != z.members[0])
        throw std::runtime_error("singleton class not rho-fixed");
    } else {
      if (tau_apply(rho, z.members[0]) != z.members[1])
        throw std::runtime_error("class members are not rho-conjugate");
      const RootVec sum = roots::add(z.members[0], z.members[1]);
      const bool sum_is_root = rs.is_root(sum);
      if (z.kind == FundamentalSet::Kind::pair && sum_is_root)
        throw std::runtime_error("pair class with r+rbar a root");
      if (z.kind == FundamentalSet::Kind::triple && !sum_is_root)
        throw std::runtime_error("triple class with r+rbar not a root");
    }
  }
  return out;
}

WeylWord class_word(const FundamentalSet& z) {
  auto letter = [](const RootVec& r) {
    int idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] == 1 && idx == 0)
        idx = static_cast<int>(i) + 1;
      else if (r[i] != 0)
        return 0;  // not a simple root
    }
    return idx;
  };
  const int a = letter(z.members[0]);
  switch (z.kind) {
    case FundamentalSet::Kind::single: return {a};
    case FundamentalSet::Kind::pair: return {a, letter(z.members[1])};
    case FundamentalSet::Kind::triple: {
      const int b = letter(z.members[1]);
      return {a, b, a};
    }
  }
  return {};
}

WeylWord twisted_coxeter(const Twisted& t) {
  const auto sets = fundamental_sets(t);
  WeylWord w;
  if (t.kind == Kind::A_odd) {
    // pairs interleaved in class order, then the central letter
    for (const auto& z : sets)
      if (z.kind == FundamentalSet::Kind::pair)
        for (int x : class_word(z)) w.push_back(x);
    for (const auto& z : sets)
      if (z.kind == FundamentalSet::Kind::single)
        for (int x : class_word(z)) w.push_back(x);
  } else {
    for (const auto& z : sets)
      for (int x : class_word(z)) w.push_back(x);
  }
  return w;
}

namespace {

bool tau_equivariant(const RootSystem& rs, const std::vector<int>& rho,
                     const WeylWord& w) {
  for (const auto& v : rs.all_roots()) {
    const RootVec lhs = tau_apply(rho, rs.apply_word(w, tau_apply(rho, v)));
    if (lhs != rs.apply_word(w, v)) return false;
  }
  return true;
}

std::vector<RootVec> sorted_set(std::vector<RootVec> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string set_str(const std::vector<RootVec>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << root_str(v[i]);
  }
  os << "}";
  return os.str();
}

void record_set(roots::OrbitReport& rep, const std::string& id,
                std::vector<RootVec> got, std::vector<RootVec> want) {
  got = sorted_set(std::move(got));
  want = sorted_set(std::move(want));
  const bool ok = got == want;
  rep.checks.push_back({id, set_str(got), set_str(want), ok});
  rep.all_pass = rep.all_pass && ok;
}

std::vector<RootVec> map_set(const RootSystem& rs, const WeylWord& w,
                             int power, const std::vector<RootVec>& zs) {
  std::vector<RootVec> out;
  for (const auto& r : zs) out.push_back(rs.apply_power(w, power, r));
  return out;
}

}  // namespace

roots::OrbitReport verify_twisted_orbit(const Twisted& t) {
  const Series s = underlying(t);
  const RootSystem rs(s);
  const int l = s.rank;
  const int n = t.n;
  const auto rho = diagram_automorphism(t);
  const auto sets = fundamental_sets(t);
  const auto w = twisted_coxeter(t);
  const std::string pre = t.kind == Kind::A_odd   ? "A1odd"
                          : t.kind == Kind::A_even ? "A1even"
                                                   : "D1";
  roots::OrbitReport rep;
  rep.series = twisted_name(t);
  rep.rank = n;

  // the partition covers every fundamental root exactly once
  {
    std::set<RootVec> seen;
    bool disjoint = true;
    int fundamental = 0;
    for (const auto& z : sets)
      for (const auto& r : z.members) {
        if (!seen.insert(r).second) disjoint = false;
        int nz = 0, sum = 0;
        for (int c : r) {
          nz += c != 0;
          sum += c;
        }
        if (nz == 1 && sum == 1) ++fundamental;
      }
    rep.record_bool(pre + ".sets", "classes partition the fundamental roots",
                    disjoint && fundamental == l);
  }

  rep.record_bool(pre + ".tau", "word commutes with tau on the root set",
                  tau_equivariant(rs, rho, w));

  // each class word sends its class to the negated class
  for (const auto& z : sets) {
    const auto zw = class_word(z);
    std::vector<RootVec> want;
    for (const auto& r : z.members) want.push_back(roots::negate(r));
    record_set(rep, pre + ".wz." + std::to_string(z.index),
               map_set(rs, zw, 1, z.members), want);
  }

  auto members_of = [&](int idx) -> const std::vector<RootVec>& {
    for (const auto& z : sets)
      if (z.index == idx) return z.members;
    throw std::logic_error("missing class index");
  };

  switch (t.kind) {
    case Kind::A_odd: {
      for (int i = 1; i <= n - 2; ++i) {
        rep.record(pre + ".orbit." + std::to_string(i),
                   rs.apply_power(w, i, simple_root(l, 1)),
                   simple_root(l, i + 1));
        rep.record(pre + ".conj." + std::to_string(i),
                   rs.apply_power(w, i, simple_root(l, 2 * n - 1)),
                   tau_apply(rho, rs.apply_power(w, i, simple_root(l, 1))));
        record_set(rep, pre + ".zmap." + std::to_string(i),
                   map_set(rs, w, -i, members_of(i + 1)), members_of(1));
      }
      break;
    }
    case Kind::D: {
      // same word as the untwisted series; actions must agree on all roots
      const auto plain = rs.coxeter_word();
      bool same = true;
      for (const auto& v : rs.all_roots())
        if (rs.apply_word(w, v) != rs.apply_word(plain, v)) same = false;
      rep.record_bool(pre + ".word", "action matches the untwisted word",
                      same);
      for (int i = 1; i <= n - 3; ++i)
        rep.record(pre + ".disj." + std::to_string(i),
                   rs.apply_power(w, i, simple_root(l, n - i)),
                   simple_root(l, n));
      for (int i = 1; i <= n - 2; ++i) {
        for (int start : {1, 2}) {
          const RootVec img = rs.apply_power(w, i, simple_root(l, start));
          const RootVec base = roots::root_sum(l, 3, i + 2);
          const bool form = img == roots::add(base, simple_root(l, 1)) ||
                            img == roots::add(base, simple_root(l, 2));
          rep.checks.push_back({pre + ".pot3.r" + std::to_string(start) + "." +
                                    std::to_string(i),
                                root_str(img),
                                root_str(base) + "+y, y in {r1,r2}", form});
          rep.all_pass = rep.all_pass && form;
        }
      }
      break;
    }
    case Kind::A_even: {
      for (int k = 1; k <= n - 2; ++k)
        rep.record(pre + ".back." + std::to_string(k),
                   rs.apply_word(w, simple_root(l, k + 1)), simple_root(l, k));
      for (int i = 1; i <= n - 2; ++i) {
        rep.record(pre + ".r1." + std::to_string(i),
                   rs.apply_power(w, i, simple_root(l, i + 1)),
                   simple_root(l, 1));
        rep.record(pre + ".conj." + std::to_string(i),
                   rs.apply_power(w, i, simple_root(l, 2 * n - i)),
                   simple_root(l, 2 * n));
      }
      for (int i = 0; i <= n - 2; ++i)
        record_set(rep, pre + ".zmap." + std::to_string(i),
                   map_set(rs, w, i, members_of(n - i)), members_of(n));
      rep.record(pre + ".eg4", rs.apply_word(w, simple_root(l, n)),
                 roots::root_sum(l, n - 1, n));
      for (int k = 1; k <= n - 2; ++k)
        rep.record(pre + ".eg3." + std::to_string(k),
                   rs.apply_word(w, simple_root(l, n - k)),
                   simple_root(l, n - k - 1));
      for (int i = 0; i <= n - 2; ++i) {
        rep.record(pre + ".eg5." + std::to_string(i),
                   rs.apply_power(w, i, simple_root(l, n)),
                   roots::root_sum(l, n - i, n));
        rep.record(pre + ".eg5conj." + std::to_string(i),
                   rs.apply_power(w, i, simple_root(l, n + 1)),
                   tau_apply(rho, rs.apply_power(w, i, simple_root(l, n))));
      }
      break;
    }
  }
  return rep;
}

std::vector<TwistedAbsorptionEntry> twisted_absorption_certificate(
    const Twisted& t) {
  const Series s = underlying(t);
  const RootSystem rs(s);
  const int l = s.rank;
  const int n = t.n;
  const auto sets = fundamental_sets(t);
  const auto w = twisted_coxeter(t);
  std::vector<TwistedAbsorptionEntry> out;

  // one enumeration of the fixed subsystem serves every power
  std::vector<RootVec> sub_roots;
  std::vector<char> sub_mask;
  auto load_subsystem = [&](const std::vector<int>& sub) {
    sub_roots = rs.subsystem_roots(sub);
    sub_mask.assign(l + 1, 0);
    for (int i : sub) sub_mask[i] = 1;
  };
  auto subsystem_contains = [&](const RootVec& v) {
    RootVec probe = v;
    bool nonneg = true;
    for (int c : probe)
      if (c < 0) nonneg = false;
    if (!nonneg) probe = roots::negate(probe);
    bool supp_ok = true;
    for (int j = 1; j <= l; ++j)
      if (probe[j - 1] != 0 && !sub_mask[j]) supp_ok = false;
    const bool member =
        std::binary_search(sub_roots.begin(), sub_roots.end(), probe);
    if (member != (supp_ok && rs.is_root(probe)))
      throw std::runtime_error("subsystem membership inconsistency");
    return member;
  };

  switch (t.kind) {
    case Kind::A_odd: {
      // fixed subsystem on r_2..r_{2n-2}
      std::vector<int> sub;
      for (int i = 2; i <= 2 * n - 2; ++i) sub.push_back(i);
      load_subsystem(sub);
      const auto& z1 = sets.front().members;  // {r_1, r_{2n-1}}
      for (int i = 0; i <= n - 2; ++i) {
        bool inside = true;
        for (const auto& r : z1)
          inside = inside && subsystem_contains(rs.apply_power(w, i, r));
        TwistedAbsorptionEntry e;
        e.what = "w^i(Z_1) in Phi_{2n-3}";
        e.power = i;
        e.ok = inside == (i >= 1);  // escapes only at i = 0
        e.detail = inside ? "contained" : "outside";
        out.push_back(std::move(e));
      }
      break;
    }
    case Kind::D: {
      std::vector<int> sub;
      for (int i = 1; i <= n - 1; ++i) sub.push_back(i);
      load_subsystem(sub);
      for (int i = 0; i <= n - 3; ++i) {
        bool inside = true;
        for (int start : {1, 2})
          inside = inside && subsystem_contains(
                                 rs.apply_power(w, i, simple_root(l, start)));
        TwistedAbsorptionEntry e;
        e.what = "w^i(r_1), w^i(r_2) in Phi_{n-1}";
        e.power = i;
        e.ok = inside;
        e.detail = inside ? "contained" : "outside";
        out.push_back(std::move(e));
      }
      break;
    }
    case Kind::A_even: {
      // truncated word: drop the outermost pair (w_1, w_{2n})
      WeylWord wt = w;
      wt.resize(wt.size() - 2);
      const auto& z1 = sets.front().members;  // r_n, r_{n+1}, r_n+r_{n+1}
      for (int i = 0; i <= n - 2; ++i) {
        bool agree = true;
        for (const auto& r : z1)
          agree = agree &&
                  rs.apply_power(w, i, r) == rs.apply_power(wt, i, r);
        TwistedAbsorptionEntry e;
        e.what = "w^i and truncated w'^i agree on Z_1";
        e.power = i;
        e.ok = agree;
        e.detail = agree ? "agree" : "differ";
        out.push_back(std::move(e));
      }
      break;
    }
  }
  return out;
}

}  // namespace cayley::twisted
