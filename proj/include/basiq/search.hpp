// Bounded backward proof search. Goals are canonicalized to multisets of
// interned formulas; schema order is realized afterwards by inserting
// explicit exchange steps, so every returned tree passes the kernel checker
// under the queried variant. Search is iterative-deepening on tree height
// (exchange steps inserted during reconstruction do not count), with a
// path-local loop check and a global node budget.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "basiq/formula.hpp"
#include "basiq/kernel.hpp"
#include "basiq/variant.hpp"

namespace basiq {

struct SearchConfig {
  int max_depth = 8;
  long long max_nodes = 1'000'000;
  bool use_cut = false;
};

struct SearchResult {
  std::optional<Derivation> proof;  // set iff proved
  int depth = 0;                    // round at which the proof was found, else the bound
  long long nodes_explored = 0;
  bool node_cap_hit = false;
  bool proved() const { return proof.has_value(); }
};

namespace detail {

class Searcher {
 public:
  Searcher(LogicVariant v, const SearchConfig& cfg) : v_(v), cfg_(cfg) {}

  SearchResult run(const Sequent& goal) {
    MSeq root;
    for (const auto& f : goal.ante) root.a.push_back(intern(f));
    for (const auto& f : goal.succ) root.s.push_back(intern(f));
    std::sort(root.a.begin(), root.a.end());
    std::sort(root.s.begin(), root.s.end());
    size_t interned = infos_.size();
    for (size_t i = 0; i < interned; ++i) closure_.push_back(static_cast<int>(i));

    SearchResult res;
    for (int d = 1; d <= cfg_.max_depth; ++d) {
      auto found = attempt(root, d);
      if (found) {
        res.proof = adapt(std::move(*found), goal);
        res.depth = d;
        break;
      }
      if (cap_hit_) break;
    }
    res.nodes_explored = nodes_;
    res.node_cap_hit = cap_hit_;
    if (!res.proof) res.depth = cfg_.max_depth;
    return res;
  }

 private:
  struct MSeq {
    std::vector<int> a, s;  // both kept sorted
    bool operator<(const MSeq& o) const { return a != o.a ? a < o.a : s < o.s; }
  };

  struct Info {
    bool atom = false, perp = false, bin = false;
    Conn conn = Conn::With;
    int left = -1, right = -1;
    std::string name;        // atom name for leaves
    bool qubit = false;      // f == (X & X^)
    std::string qubit_name;  // the X above
  };

  // ---------------------------------------------------------- interning

  int intern(const Formula& f) {
    auto key = f.text();
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    int id = static_cast<int>(infos_.size());
    ids_.emplace(std::move(key), id);
    formulas_.push_back(f);
    infos_.push_back(Info{});
    Info info;
    switch (f.kind()) {
      case Formula::Kind::Atom:
        info.atom = true;
        info.name = f.name();
        break;
      case Formula::Kind::PerpAtom:
        info.perp = true;
        info.name = f.name();
        break;
      case Formula::Kind::Bin: {
        info.bin = true;
        info.conn = f.conn();
        int l = intern(f.left());
        int r = intern(f.right());
        info.left = l;
        info.right = r;
        if (auto q = match_qubit_pattern(f)) {
          info.qubit = true;
          info.qubit_name = *q;
        }
        break;
      }
    }
    infos_[id] = std::move(info);
    return id;
  }

  static void remove_one(std::vector<int>& v, int id) {
    v.erase(std::lower_bound(v.begin(), v.end(), id));
  }
  static void add_one(std::vector<int>& v, int id) {
    v.insert(std::lower_bound(v.begin(), v.end(), id), id);
  }
  static long count_of(const std::vector<int>& v, int id) {
    auto lo = std::lower_bound(v.begin(), v.end(), id);
    auto hi = std::upper_bound(v.begin(), v.end(), id);
    return hi - lo;
  }

  std::vector<Formula> fs(const std::vector<int>& ids) const {
    std::vector<Formula> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(formulas_[static_cast<size_t>(id)]);
    return out;
  }

  // --------------------------------------------------- exchange insertion

  // Wraps d in explicit exchange steps until its conclusion is exactly
  // `target` (same sides as multisets is a caller guarantee).
  static Derivation adapt(Derivation d, const Sequent& target) {
    d = bubble(std::move(d), target.ante, /*left=*/true);
    return bubble(std::move(d), target.succ, /*left=*/false);
  }

  static Derivation bubble(Derivation d, const std::vector<Formula>& want, bool left) {
    std::vector<Formula> cur = left ? d.conclusion.ante : d.conclusion.succ;
    for (size_t i = 0; i < want.size(); ++i) {
      if (cur[i] == want[i]) continue;
      size_t j = i + 1;
      while (j < cur.size() && !(cur[j] == want[i])) ++j;
      for (; j > i; --j) {
        std::swap(cur[j - 1], cur[j]);
        Sequent ns = d.conclusion;
        (left ? ns.ante : ns.succ) = cur;
        std::vector<Derivation> kid;
        kid.push_back(std::move(d));
        d = Derivation{left ? RuleName::EXCH_L : RuleName::EXCH_R, std::move(ns),
                       std::move(kid)};
      }
    }
    return d;
  }

  // ------------------------------------------------------------- search

  std::optional<Derivation> attempt(const MSeq& goal, int budget) {
    if (cap_hit_) return std::nullopt;
    if (++nodes_ > cfg_.max_nodes) {
      cap_hit_ = true;
      return std::nullopt;
    }
    if (budget <= 0) return std::nullopt;

    if (goal.a.size() == 1 && goal.s.size() == 1 && goal.a[0] == goal.s[0]) {
      Formula f = formulas_[static_cast<size_t>(goal.a[0])];
      return Derivation{RuleName::ID, Sequent{{f}, {f}}, {}};
    }
    if (budget <= 1) return std::nullopt;  // every non-axiom rule needs a subtree

    if (!on_path_.insert(goal).second) return std::nullopt;
    struct Eraser {
      std::set<MSeq>& set;
      const MSeq& g;
      ~Eraser() { set.erase(g); }
    } eraser{on_path_, goal};

    if (auto d = unary_rules(goal, budget)) return d;
    if (auto d = binary_rules(goal, budget)) return d;
    if (v_.structural) {
      if (auto d = structural_rules(goal, budget)) return d;
    }
    if (auto d = synthesis_rules(goal, budget)) return d;
    if (cfg_.use_cut) {
      if (auto d = cut_rule(goal, budget)) return d;
    }
    return std::nullopt;
  }

  std::optional<Derivation> try1(RuleName r, MSeq pm, Sequent conc, Sequent prem, int budget) {
    auto d = attempt(pm, budget - 1);
    if (!d) return std::nullopt;
    std::vector<Derivation> kids;
    kids.push_back(adapt(std::move(*d), prem));
    return Derivation{r, std::move(conc), std::move(kids)};
  }

  std::optional<Derivation> try2(RuleName r, MSeq p1, MSeq p2, Sequent conc, Sequent prem1,
                                 Sequent prem2, int budget) {
    auto d1 = attempt(p1, budget - 1);
    if (!d1) return std::nullopt;
    auto d2 = attempt(p2, budget - 1);
    if (!d2) return std::nullopt;
    std::vector<Derivation> kids;
    kids.push_back(adapt(std::move(*d1), prem1));
    kids.push_back(adapt(std::move(*d2), prem2));
    return Derivation{r, std::move(conc), std::move(kids)};
  }

  template <typename Fn>
  void for_distinct(const std::vector<int>& v, Fn&& fn) const {
    for (size_t i = 0; i < v.size(); ++i) {
      if (i > 0 && v[i] == v[i - 1]) continue;
      fn(v[i]);
    }
  }

  // Enumerates ordered splits of sorted `v` into two sorted parts.
  template <typename Fn>
  std::optional<Derivation> for_splits(const std::vector<int>& v, Fn&& fn) const {
    if (v.size() > 16) {  // out of scope for desk-size goals; try the trivial splits only
      if (auto d = fn(v, std::vector<int>{})) return d;
      return fn(std::vector<int>{}, v);
    }
    for (unsigned long long mask = 0; mask < (1ull << v.size()); ++mask) {
      std::vector<int> x, y;
      for (size_t i = 0; i < v.size(); ++i) ((mask >> i) & 1 ? y : x).push_back(v[i]);
      if (auto d = fn(std::move(x), std::move(y))) return d;
    }
    return std::nullopt;
  }

  std::optional<Derivation> unary_rules(const MSeq& goal, int budget) {
    bool ent_ok = !v_.structural;

    // '&' explicit reflection: replace a left '&' by one component.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.a, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::With) return;
        std::vector<int> rest = goal.a;
        remove_one(rest, c);
        if (!rest.empty() && !v_.left) return;
        for (RuleName r : {RuleName::WITH_REFL_EXPL_1, RuleName::WITH_REFL_EXPL_2}) {
          if (hit) return;
          int pick = r == RuleName::WITH_REFL_EXPL_1 ? ic.left : ic.right;
          MSeq pm{rest, goal.s};
          add_one(pm.a, pick);
          Sequent conc{append_fs(rest, {c}), fs(goal.s)};
          Sequent prem{append_fs(rest, {pick}), fs(goal.s)};
          hit = try1(r, std::move(pm), std::move(conc), std::move(prem), budget);
        }
      });
      if (hit) return hit;
    }

    // 'v' explicit reflection: a right 'v' from either component.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.s, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::Or) return;
        std::vector<int> rest = goal.s;
        remove_one(rest, c);
        if (!rest.empty() && !v_.right) return;
        for (int pick : {ic.left, ic.right}) {
          if (hit) return;
          MSeq pm{goal.a, rest};
          add_one(pm.s, pick);
          Sequent conc{fs(goal.a), append_fs(rest, {c})};
          Sequent prem{fs(goal.a), append_fs(rest, {pick})};
          hit = try1(RuleName::OR_REFL_EXPL, std::move(pm), std::move(conc), std::move(prem),
                     budget);
        }
      });
      if (hit) return hit;
    }

    // '%' formation: unfold a right '%' into its two components.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.s, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::Par) return;
        std::vector<int> rest = goal.s;
        remove_one(rest, c);
        if (!rest.empty() && !v_.right) return;
        MSeq pm{goal.a, rest};
        add_one(pm.s, ic.left);
        add_one(pm.s, ic.right);
        Sequent conc{fs(goal.a), append_fs(rest, {c})};
        Sequent prem{fs(goal.a), append_fs(rest, {ic.left, ic.right})};
        hit = try1(RuleName::PAR_FORM, std::move(pm), std::move(conc), std::move(prem), budget);
      });
      if (hit) return hit;
    }

    // '*' formation: unfold a left '*' into its two components.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.a, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::Times) return;
        std::vector<int> rest = goal.a;
        remove_one(rest, c);
        if (!rest.empty() && !v_.left) return;
        MSeq pm{rest, goal.s};
        add_one(pm.a, ic.left);
        add_one(pm.a, ic.right);
        Sequent conc{append_fs(rest, {c}), fs(goal.s)};
        Sequent prem{append_fs(rest, {ic.left, ic.right}), fs(goal.s)};
        hit =
            try1(RuleName::TIMES_FORM, std::move(pm), std::move(conc), std::move(prem), budget);
      });
      if (hit) return hit;
    }

    if (!ent_ok) return std::nullopt;

    // '@' implicit reflection, backward: fold a right atom pair into '@'.
    for (RuleName r : {RuleName::ENT_REFL_IMPL_1, RuleName::ENT_REFL_IMPL_2}) {
      bool plain = r == RuleName::ENT_REFL_IMPL_1;
      std::optional<Derivation> hit;
      for_distinct(goal.s, [&](int x) {
        if (hit) return;
        const Info& ix = info(x);
        if (plain ? !ix.atom : !ix.perp) return;
        for_distinct(goal.s, [&](int y) {
          if (hit) return;
          const Info& iy = info(y);
          if (plain ? !iy.atom : !iy.perp) return;
          if (x == y && count_of(goal.s, x) < 2) return;
          std::vector<int> rest = goal.s;
          remove_one(rest, x);
          remove_one(rest, y);
          if (!rest.empty() && !v_.right) return;
          int ent = intern(mk_ent_pair(ix.name, iy.name));
          MSeq pm{goal.a, rest};
          add_one(pm.s, ent);
          Sequent conc{fs(goal.a), append_fs(rest, {x, y})};
          Sequent prem{fs(goal.a), append_fs(rest, {ent})};
          hit = try1(r, std::move(pm), std::move(conc), std::move(prem), budget);
        });
      });
      if (hit) return hit;
    }

    // '@' atom reflection, backward: fold a right atom pair into X @ Q_Y.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.s, [&](int x) {
        if (hit) return;
        const Info& ix = info(x);
        if (!ix.atom) return;
        for_distinct(goal.s, [&](int y) {
          if (hit) return;
          const Info& iy = info(y);
          if (!iy.atom) return;
          if (x == y && count_of(goal.s, x) < 2) return;
          std::vector<int> rest = goal.s;
          remove_one(rest, x);
          remove_one(rest, y);
          if (!rest.empty() && !v_.right) return;
          int ent = intern(Formula::bin(Conn::Ent, formulas_[static_cast<size_t>(x)],
                                        mk_qubit(iy.name)));
          MSeq pm{goal.a, rest};
          add_one(pm.s, ent);
          Sequent conc{fs(goal.a), append_fs(rest, {x, y})};
          Sequent prem{fs(goal.a), append_fs(rest, {ent})};
          hit = try1(RuleName::ENT_ATOM_REFL, std::move(pm), std::move(conc), std::move(prem),
                     budget);
        });
      });
      if (hit) return hit;
    }

    return std::nullopt;
  }

  std::optional<Derivation> binary_rules(const MSeq& goal, int budget) {
    bool ent_ok = !v_.structural;

    // '&' formation.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.s, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::With) return;
        std::vector<int> rest = goal.s;
        remove_one(rest, c);
        if (!rest.empty() && !v_.right) return;
        MSeq p1{goal.a, rest}, p2{goal.a, rest};
        add_one(p1.s, ic.left);
        add_one(p2.s, ic.right);
        hit = try2(RuleName::WITH_FORM, std::move(p1), std::move(p2),
                   Sequent{fs(goal.a), append_fs(rest, {c})},
                   Sequent{fs(goal.a), append_fs(rest, {ic.left})},
                   Sequent{fs(goal.a), append_fs(rest, {ic.right})}, budget);
      });
      if (hit) return hit;
    }

    // 'v' formation.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.a, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::Or) return;
        std::vector<int> rest = goal.a;
        remove_one(rest, c);
        if (!rest.empty() && !v_.left) return;
        MSeq p1{rest, goal.s}, p2{rest, goal.s};
        add_one(p1.a, ic.left);
        add_one(p2.a, ic.right);
        hit = try2(RuleName::OR_FORM, std::move(p1), std::move(p2),
                   Sequent{append_fs(rest, {c}), fs(goal.s)},
                   Sequent{append_fs(rest, {ic.left}), fs(goal.s)},
                   Sequent{append_fs(rest, {ic.right}), fs(goal.s)}, budget);
      });
      if (hit) return hit;
    }

    // '@' formation.
    if (ent_ok) {
      std::optional<Derivation> hit;
      for_distinct(goal.s, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::Ent) return;
        if (!info(ic.left).qubit || !info(ic.right).qubit) return;
        std::vector<int> rest = goal.s;
        remove_one(rest, c);
        if (!rest.empty() && !v_.right) return;
        int x = intern(Formula::atom(info(ic.left).qubit_name));
        int y = intern(Formula::atom(info(ic.right).qubit_name));
        int xp = intern(Formula::perp_atom(info(ic.left).qubit_name));
        int yp = intern(Formula::perp_atom(info(ic.right).qubit_name));
        MSeq p1{goal.a, rest}, p2{goal.a, rest};
        add_one(p1.s, x);
        add_one(p1.s, y);
        add_one(p2.s, xp);
        add_one(p2.s, yp);
        hit = try2(RuleName::ENT_FORM, std::move(p1), std::move(p2),
                   Sequent{fs(goal.a), append_fs(rest, {c})},
                   Sequent{fs(goal.a), append_fs(rest, {x, y})},
                   Sequent{fs(goal.a), append_fs(rest, {xp, yp})}, budget);
      });
      if (hit) return hit;
    }

    // '%' explicit reflection: split contexts around a left '%'.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.a, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::Par) return;
        std::vector<int> rest = goal.a;
        remove_one(rest, c);
        if (!rest.empty() && !v_.left) return;
        hit = for_splits(rest, [&](std::vector<int> g1, std::vector<int> g2) {
          return for_splits(goal.s, [&](std::vector<int> d1, std::vector<int> d2) {
            MSeq p1{g1, d1}, p2{g2, d2};
            add_one(p1.a, ic.left);
            add_one(p2.a, ic.right);
            Sequent conc{cat_fs(g1, g2, {c}), cat_fs(d1, d2, {})};
            Sequent prem1{append_fs(g1, {ic.left}), fs(d1)};
            Sequent prem2{append_fs(g2, {ic.right}), fs(d2)};
            return try2(RuleName::PAR_REFL_EXPL, std::move(p1), std::move(p2), std::move(conc),
                        std::move(prem1), std::move(prem2), budget);
          });
        });
      });
      if (hit) return hit;
    }

    // '*' explicit reflection: split contexts around a right '*'.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.s, [&](int c) {
        if (hit) return;
        const Info& ic = info(c);
        if (!ic.bin || ic.conn != Conn::Times) return;
        std::vector<int> rest = goal.s;
        remove_one(rest, c);
        if (!rest.empty() && !v_.right) return;
        hit = for_splits(goal.a, [&](std::vector<int> g1, std::vector<int> g2) {
          return for_splits(rest, [&](std::vector<int> d1, std::vector<int> d2) {
            MSeq p1{g1, d1}, p2{g2, d2};
            add_one(p1.s, ic.left);
            add_one(p2.s, ic.right);
            Sequent conc{cat_fs(g1, g2, {}), cat_fs(d1, d2, {c})};
            Sequent prem1{fs(g1), append_fs(d1, {ic.left})};
            Sequent prem2{fs(g2), append_fs(d2, {ic.right})};
            return try2(RuleName::TIMES_REFL_EXPL, std::move(p1), std::move(p2),
                        std::move(conc), std::move(prem1), std::move(prem2), budget);
          });
        });
      });
      if (hit) return hit;
    }

    // '@' explicit reflection: split contexts around a left '@' of qubits.
    if (ent_ok) {
      for (RuleName r : {RuleName::ENT_REFL_EXPL_1, RuleName::ENT_REFL_EXPL_2}) {
        bool plain = r == RuleName::ENT_REFL_EXPL_1;
        std::optional<Derivation> hit;
        for_distinct(goal.a, [&](int c) {
          if (hit) return;
          const Info& ic = info(c);
          if (!ic.bin || ic.conn != Conn::Ent) return;
          if (!info(ic.left).qubit || !info(ic.right).qubit) return;
          std::vector<int> rest = goal.a;
          remove_one(rest, c);
          if (!rest.empty() && !v_.left) return;
          int x = plain ? intern(Formula::atom(info(ic.left).qubit_name))
                        : intern(Formula::perp_atom(info(ic.left).qubit_name));
          int y = plain ? intern(Formula::atom(info(ic.right).qubit_name))
                        : intern(Formula::perp_atom(info(ic.right).qubit_name));
          hit = for_splits(rest, [&](std::vector<int> g1, std::vector<int> g2) {
            return for_splits(goal.s, [&](std::vector<int> d1, std::vector<int> d2) {
              MSeq p1{g1, d1}, p2{g2, d2};
              add_one(p1.a, x);
              add_one(p2.a, y);
              Sequent conc{cat_fs(g1, g2, {c}), cat_fs(d1, d2, {})};
              Sequent prem1{append_fs(g1, {x}), fs(d1)};
              Sequent prem2{append_fs(g2, {y}), fs(d2)};
              return try2(r, std::move(p1), std::move(p2), std::move(conc), std::move(prem1),
                          std::move(prem2), budget);
            });
          });
        });
        if (hit) return hit;
      }
    }

    // EPR: only in the base variant, only on a lone right-hand X @ Q_Y.
    if (v_ == kVariantB && goal.s.size() == 1) {
      int e = goal.s[0];
      const Info& ie = info(e);
      if (ie.bin && ie.conn == Conn::Ent && info(ie.left).atom && info(ie.right).qubit) {
        const std::string& xn = info(ie.left).name;
        int qx = intern(mk_qubit(xn));
        int full = intern(Formula::bin(Conn::Ent, formulas_[static_cast<size_t>(qx)],
                                       formulas_[static_cast<size_t>(ie.right)]));
        MSeq p1{goal.a, {full}};
        MSeq p2{{qx}, {ie.left}};
        std::sort(p1.s.begin(), p1.s.end());
        if (auto d = try2(RuleName::EPR, std::move(p1), std::move(p2),
                          Sequent{fs(goal.a), fs({e})}, Sequent{fs(goal.a), fs({full})},
                          Sequent{fs({qx}), fs({ie.left})}, budget))
          return d;
      }
    }

    return std::nullopt;
  }

  std::optional<Derivation> structural_rules(const MSeq& goal, int budget) {
    // Weakening, backward: remove one formula from either side.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.a, [&](int x) {
        if (hit) return;
        MSeq pm{goal.a, goal.s};
        remove_one(pm.a, x);
        Sequent prem{fs(pm.a), fs(pm.s)};
        hit = try1(RuleName::WEAK_L, std::move(pm), Sequent{fs(goal.a), fs(goal.s)},
                   std::move(prem), budget);
      });
      if (hit) return hit;
      for_distinct(goal.s, [&](int x) {
        if (hit) return;
        MSeq pm{goal.a, goal.s};
        remove_one(pm.s, x);
        Sequent prem{fs(pm.a), fs(pm.s)};
        hit = try1(RuleName::WEAK_L, std::move(pm), Sequent{fs(goal.a), fs(goal.s)},
                   std::move(prem), budget);
      });
      if (hit) return hit;
    }

    // Contraction, backward: duplicate one formula on its side.
    {
      std::optional<Derivation> hit;
      for_distinct(goal.a, [&](int x) {
        if (hit) return;
        MSeq pm{goal.a, goal.s};
        add_one(pm.a, x);
        Sequent prem{fs(pm.a), fs(pm.s)};
        hit = try1(RuleName::CONTR_L, std::move(pm), Sequent{fs(goal.a), fs(goal.s)},
                   std::move(prem), budget);
      });
      if (hit) return hit;
      for_distinct(goal.s, [&](int x) {
        if (hit) return;
        MSeq pm{goal.a, goal.s};
        add_one(pm.s, x);
        Sequent prem{fs(pm.a), fs(pm.s)};
        hit = try1(RuleName::CONTR_R, std::move(pm), Sequent{fs(goal.a), fs(goal.s)},
                   std::move(prem), budget);
      });
      if (hit) return hit;
    }

    return std::nullopt;
  }

  // '&' implicit reflection, backward: conjoin a right formula with a partner
  // drawn from the root goal's subformulas. This is the only synthesizing
  // step; keeping it analytic (closure-bounded) and last keeps search honest.
  std::optional<Derivation> synthesis_rules(const MSeq& goal, int budget) {
    std::optional<Derivation> hit;
    for_distinct(goal.s, [&](int c) {
      if (hit) return;
      std::vector<int> rest = goal.s;
      remove_one(rest, c);
      if (!rest.empty() && !v_.right) return;
      Sequent conc{fs(goal.a), append_fs(rest, {c})};
      for (int y : closure_) {
        if (hit) return;
        for (RuleName r : {RuleName::WITH_REFL_IMPL_1, RuleName::WITH_REFL_IMPL_2}) {
          if (hit) return;
          Formula cf = formulas_[static_cast<size_t>(c)];
          Formula yf = formulas_[static_cast<size_t>(y)];
          Formula with = r == RuleName::WITH_REFL_IMPL_1 ? Formula::bin(Conn::With, cf, yf)
                                                         : Formula::bin(Conn::With, yf, cf);
          int w = intern(with);
          MSeq pm{goal.a, rest};
          add_one(pm.s, w);
          Sequent prem{fs(goal.a), append_fs(rest, {w})};
          hit = try1(r, std::move(pm), Sequent{conc.ante, conc.succ}, std::move(prem), budget);
        }
      }
    });
    return hit;
  }

  // Cut, backward (opt-in): a closure formula cut against the whole goal,
  // in the context-free visible form G |- C and C |- D.
  std::optional<Derivation> cut_rule(const MSeq& goal, int budget) {
    for (int c : closure_) {
      MSeq p1{goal.a, {c}};
      MSeq p2{{c}, goal.s};
      auto d = try2(RuleName::CUT, std::move(p1), std::move(p2),
                    Sequent{fs(goal.a), fs(goal.s)}, Sequent{fs(goal.a), fs({c})},
                    Sequent{fs({c}), fs(goal.s)}, budget);
      if (d) return d;
    }
    return std::nullopt;
  }

  // ------------------------------------------------------------- helpers

  const Info& info(int id) const { return infos_[static_cast<size_t>(id)]; }

  std::vector<Formula> append_fs(const std::vector<int>& ctx,
                                 std::initializer_list<int> tail) const {
    std::vector<Formula> out = fs(ctx);
    for (int id : tail) out.push_back(formulas_[static_cast<size_t>(id)]);
    return out;
  }

  std::vector<Formula> cat_fs(const std::vector<int>& a, const std::vector<int>& b,
                              std::initializer_list<int> tail) const {
    std::vector<Formula> out = fs(a);
    for (const auto& f : fs(b)) out.push_back(f);
    for (int id : tail) out.push_back(formulas_[static_cast<size_t>(id)]);
    return out;
  }

  LogicVariant v_;
  SearchConfig cfg_;
  std::unordered_map<std::string, int> ids_;
  std::vector<Formula> formulas_;
  std::vector<Info> infos_;
  std::vector<int> closure_;
  std::set<MSeq> on_path_;
  long long nodes_ = 0;
  bool cap_hit_ = false;
};

}  // namespace detail

inline SearchResult prove(const Sequent& goal, LogicVariant v, const SearchConfig& cfg = {}) {
  detail::Searcher searcher(v, cfg);
  return searcher.run(goal);
}

struct EquivResult {
  std::optional<Derivation> lr, rl;
  long long nodes_explored = 0;
  bool equiv() const { return lr.has_value() && rl.has_value(); }
};

inline EquivResult equivalent(const Formula& f, const Formula& g, LogicVariant v,
                              const SearchConfig& cfg = {}) {
  EquivResult out;
  SearchResult r1 = prove(Sequent{{f}, {g}}, v, cfg);
  out.nodes_explored += r1.nodes_explored;
  if (!r1.proved()) return out;
  SearchResult r2 = prove(Sequent{{g}, {f}}, v, cfg);
  out.nodes_explored += r2.nodes_explored;
  if (!r2.proved()) return out;
  out.lr = std::move(r1.proof);
  out.rl = std::move(r2.proof);
  return out;
}

// Bounded non-derivability evidence: re-runs the search at the given bound
// and packages the exhaustion statistics. Never claims more than "no proof
// within these bounds".
struct ExhaustionRecord {
  Sequent goal;
  LogicVariant variant;
  int depth = 0;
  long long nodes_explored = 0;
  bool node_cap_hit = false;
  bool proved = false;  // true means the certificate request does not apply
};

inline ExhaustionRecord refutation_certificate(const Sequent& goal, LogicVariant v, int depth,
                                               const SearchConfig& base = {}) {
  SearchConfig cfg = base;
  cfg.max_depth = depth;
  SearchResult r = prove(goal, v, cfg);
  return ExhaustionRecord{goal, v, r.depth, r.nodes_explored, r.node_cap_hit, r.proved()};
}

}  // namespace basiq
