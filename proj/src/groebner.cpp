#include "gkz/groebner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace gkz {

GroebnerStats& global_groebner_stats() {
  static GroebnerStats stats;
  return stats;
}

namespace {

struct Lead {
  Monomial m;
  std::uint32_t comp;
};

class Reducer {
 public:
  explicit Reducer(const ModuleOrder& ord) : ord_(ord) {}

  void add(const Vec& g) {
    leads_.push_back(Lead{g.front().m, g.front().comp});
    elems_.push_back(&g);
  }
  void clear() {
    leads_.clear();
    elems_.clear();
  }

  long find(const Monomial& m, std::uint32_t comp, long skip = -1) const {
    for (std::size_t i = 0; i < leads_.size(); ++i) {
      if (static_cast<long>(i) == skip) continue;
      if (leads_[i].comp == comp && leads_[i].m.divides(m)) return static_cast<long>(i);
    }
    return -1;
  }

  // Full reduction; `skip` excludes one reducer (used for interreduction).
  Vec reduce(const Vec& f, long skip = -1) const {
    Vec done;
    Vec p = f;
    std::size_t s = 0;
    while (s < p.size()) {
      const Term& t = p[s];
      long i = find(t.m, t.comp, skip);
      if (i < 0) {
        done.push_back(t);
        ++s;
        continue;
      }
      const Vec& g = *elems_[static_cast<std::size_t>(i)];
      Rational c = t.c / g.front().c;
      Monomial q = t.m / g.front().m;
      // merge p[s+1..] with -(c q) * g[1..]
      Vec next;
      next.reserve(p.size() - s + g.size());
      std::size_t a = s + 1, b = 1;
      while (a < p.size() || b < g.size()) {
        if (b == g.size()) {
          next.push_back(std::move(p[a++]));
          continue;
        }
        Term tb{-(g[b].c * c), g[b].m * q, g[b].comp};
        if (a == p.size()) {
          next.push_back(std::move(tb));
          ++b;
          continue;
        }
        int cmp = ord_.compare(p[a], tb);
        if (cmp > 0) {
          next.push_back(std::move(p[a++]));
        } else if (cmp < 0) {
          next.push_back(std::move(tb));
          ++b;
        } else {
          p[a].c += tb.c;
          if (sgn(p[a].c) != 0) next.push_back(std::move(p[a]));
          ++a;
          ++b;
        }
      }
      p = std::move(next);
      s = 0;
    }
    return done;
  }

 private:
  const ModuleOrder& ord_;
  std::vector<Lead> leads_;
  std::vector<const Vec*> elems_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  long long sugar;
};

class Engine {
 public:
  Engine(const ModuleOrder& ord, const GroebnerOptions& opt) : ord_(ord), opt_(opt), reducer_(ord) {}

  long long weight(const Monomial& m) const {
    long long w = 0;
    for (std::size_t j = 0; j < ord_.mono.nvars; ++j)
      w += (opt_.var_weight.empty() ? 1 : opt_.var_weight[j]) * m.e[j];
    return w;
  }
  long long weight(const Term& t) const {
    long long w = weight(t.m);
    if (t.comp < opt_.comp_weight.size()) w += opt_.comp_weight[t.comp];
    return w;
  }
  long long sugar_of(const Vec& f) const {
    long long s = std::numeric_limits<long long>::min();
    for (const Term& t : f) s = std::max(s, weight(t));
    return s;
  }

  GroebnerResult run(const std::vector<Vec>& inputs) {
    GroebnerResult res;
    res.minimal.assign(inputs.size(), false);
    std::vector<std::size_t> order(inputs.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<long long> in_sugar(inputs.size(), 0);
    for (std::size_t k = 0; k < inputs.size(); ++k)
      if (!inputs[k].empty()) in_sugar[k] = sugar_of(inputs[k]);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return in_sugar[a] < in_sugar[b]; });
    std::size_t next_input = 0;
    while (next_input < order.size() && inputs[order[next_input]].empty()) ++next_input;

    for (;;) {
      while (next_input < order.size() && inputs[order[next_input]].empty()) ++next_input;
      long best = select_pair();
      bool take_pair;
      if (best < 0 && next_input == order.size()) break;
      if (best < 0)
        take_pair = false;
      else if (next_input == order.size())
        take_pair = true;
      else
        take_pair = pairs_[static_cast<std::size_t>(best)].sugar <= in_sugar[order[next_input]];

      Vec h;
      long long sugar;
      long input_index = -1;
      if (take_pair) {
        Pair p = pairs_[static_cast<std::size_t>(best)];
        pairs_.erase(pairs_.begin() + best);
        h = spoly(p);
        sugar = p.sugar;
        ++stats_.pairs_reduced;
      } else {
        input_index = static_cast<long>(order[next_input]);
        h = inputs[order[next_input]];
        sugar = in_sugar[order[next_input]];
        ++next_input;
      }
      h = reducer_.reduce(h);
      if (h.empty()) {
        if (take_pair) ++stats_.zero_reductions;
        continue;
      }
      if (input_index >= 0) res.minimal[static_cast<std::size_t>(input_index)] = true;
      make_monic(h);
      insert(std::move(h), opt_.homogeneous ? sugar : std::max(sugar, sugar_of(h)));
    }

    res.basis = reduced_basis();
    stats_.basis_size = res.basis.size();
    res.stats = stats_;
    GroebnerStats& g = global_groebner_stats();
    g.pairs_created += stats_.pairs_created;
    g.pairs_reduced += stats_.pairs_reduced;
    g.zero_reductions += stats_.zero_reductions;
    g.basis_size += stats_.basis_size;
    return res;
  }

 private:
  long select_pair() const {
    long best = -1;
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
      if (best < 0) {
        best = static_cast<long>(k);
        continue;
      }
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[static_cast<std::size_t>(best)];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = static_cast<long>(k);
        continue;
      }
      if (ord_.compare(a.lcm, a.comp, b.lcm, b.comp) < 0) best = static_cast<long>(k);
    }
    return best;
  }

  Vec spoly(const Pair& p) const {
    const Vec& f = basis_[p.i];
    const Vec& g = basis_[p.j];
    Vec a = mul_term(f, 1 / f.front().c, p.lcm / f.front().m);
    return sub_mul(ord_, a, 1 / g.front().c, p.lcm / g.front().m, g);
  }

  void insert(Vec h, long long sugar) {
    const std::size_t k = basis_.size();
    const Monomial mk = h.front().m;
    const std::uint32_t ck = h.front().comp;

    // B criterion on existing pairs
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      if (p.comp == ck && mk.divides(p.lcm) && !(lcm(basis_[p.i].front().m, mk) == p.lcm) &&
          !(lcm(basis_[p.j].front().m, mk) == p.lcm))
        continue;
      kept.push_back(p);
    }
    pairs_ = std::move(kept);

    struct Cand {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool alive;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i] || basis_[i].front().comp != ck) continue;
      const Monomial& mi = basis_[i].front().m;
      cands.push_back(Cand{i, lcm(mi, mk), coprime(mi, mk), true});
    }
    // M criterion: drop pairs whose lcm is properly divisible by another new lcm
    for (auto& a : cands)
      for (const auto& b : cands)
        if (&a != &b && b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.alive = false;
          break;
        }
    // F criterion and product criterion on classes of equal lcm
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].alive) continue;
      bool any_coprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y)
        if (cands[y].alive && cands[y].lcm == cands[x].lcm) {
          any_coprime = any_coprime || cands[y].coprime;
          cands[y].alive = false;
        }
      if (opt_.ideal && any_coprime) cands[x].alive = false;
    }
    for (const Cand& c : cands) {
      if (!c.alive) continue;
      const Vec& fi = basis_[c.i];
      long long s = std::max(sugars_[c.i] + weight(c.lcm / fi.front().m), sugar + weight(c.lcm / mk));
      pairs_.push_back(Pair{c.i, k, c.lcm, ck, s});
      ++stats_.pairs_created;
    }
    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && basis_[i].front().comp == ck && mk.divides(basis_[i].front().m)) active_[i] = false;

    basis_.push_back(std::move(h));
    sugars_.push_back(sugar);
    active_.push_back(true);
    rebuild_reducer();
  }

  void rebuild_reducer() {
    reducer_.clear();
    for (const Vec& g : basis_) reducer_.add(g);
  }

  std::vector<Vec> reduced_basis() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j || basis_[j].front().comp != basis_[i].front().comp) continue;
        if (!basis_[j].front().m.divides(basis_[i].front().m)) continue;
        if (!(basis_[j].front().m == basis_[i].front().m) || j < i) redundant = true;
      }
      if (!redundant) keep.push_back(i);
    }
    Reducer red(ord_);
    for (std::size_t i : keep) red.add(basis_[i]);
    std::vector<Vec> out;
    for (std::size_t x = 0; x < keep.size(); ++x) {
      const Vec& g = basis_[keep[x]];
      Vec tail(g.begin() + 1, g.end());
      Vec r{g.front()};
      Vec rt = red.reduce(tail, static_cast<long>(x));
      r.insert(r.end(), rt.begin(), rt.end());
      make_monic(r);
      out.push_back(std::move(r));
    }
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) { return ord_.compare(a.front(), b.front()) < 0; });
    return out;
  }

  const ModuleOrder& ord_;
  const GroebnerOptions& opt_;
  Reducer reducer_;
  std::vector<Vec> basis_;
  std::vector<long long> sugars_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

GroebnerResult groebner(const ModuleOrder& ord, const std::vector<Vec>& inputs, const GroebnerOptions& opt) {
  Engine engine(ord, opt);
  return engine.run(inputs);
}

Vec normal_form(const ModuleOrder& ord, const Vec& f, const std::vector<Vec>& reducers) {
  Reducer red(ord);
  for (const Vec& g : reducers)
    if (!g.empty()) red.add(g);
  return red.reduce(f);
}

bool reduces_to_zero(const ModuleOrder& ord, const std::vector<Vec>& elements, const std::vector<Vec>& gb) {
  Reducer red(ord);
  for (const Vec& g : gb)
    if (!g.empty()) red.add(g);
  for (const Vec& f : elements)
    if (!red.reduce(f).empty()) return false;
  return true;
}

}  // namespace gkz
