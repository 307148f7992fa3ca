#include "braceforge/automorphism.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace braceforge {

namespace {

std::vector<int> greedy_generating_set(const GroupPtr& G) {
  std::vector<int> gens;
  Subgroup s;
  s.parent = G;
  s.members = {0};
  while (s.order() < G->n) {
    int x = 0;
    while (s.contains(x)) ++x;
    gens.push_back(x);
    s = subgroup_closure(G, gens);
  }
  return gens;
}

}  // namespace

std::vector<GroupMap> automorphisms_bruteforce(const GroupPtr& G) {
  const int n = G->n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<GroupMap> out;
  // every automorphism fixes 0, so permute indices 1..n-1 only
  std::vector<int> rest(perm.begin() + (n > 1 ? 1 : 0), perm.end());
  do {
    GroupMap f(n);
    f[0] = 0;
    for (int i = 1; i < n; ++i) f[i] = rest[i - 1];
    if (is_homomorphism(*G, *G, f)) out.push_back(f);
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupMap> automorphisms(const GroupPtr& G, int bound) {
  if (G->n > bound) throw bound_exceeded("automorphisms: |G| exceeds bound");
  if (G->n <= 8) return automorphisms_bruteforce(G);
  const std::vector<int> gens = greedy_generating_set(G);
  // expression scheme: reach every element as (previous element) * generator
  std::vector<std::pair<int, int>> expr(G->n, {-2, -2});
  std::vector<int> order;
  expr[0] = {-1, -1};
  order.push_back(0);
  for (size_t k = 0; k < gens.size(); ++k)
    if (expr[gens[k]].first == -2) {
      expr[gens[k]] = {-1, static_cast<int>(k)};
      order.push_back(gens[k]);
    }
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      int x = G->mul(order[i], gens[k]);
      if (expr[x].first == -2) {
        expr[x] = {order[i], static_cast<int>(k)};
        order.push_back(x);
      }
    }
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int ord = G->element_order(gens[k]);
    for (int h = 0; h < G->n; ++h)
      if (G->element_order(h) == ord) cand[k].push_back(h);
  }
  std::vector<int> pick(gens.size(), -1);
  std::vector<GroupMap> out;
  GroupMap img;
  auto check = [&]() {
    img.assign(G->n, -1);
    for (int x : order) {
      auto [p, k] = expr[x];
      if (x == 0) img[0] = 0;
      else if (p == -1) img[x] = pick[k];
      else img[x] = G->mul(img[p], pick[k]);
    }
    if (is_bijective(img) && is_homomorphism(*G, *G, img)) out.push_back(img);
  };
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == gens.size()) {
      check();
      return;
    }
    for (int c : cand[k]) {
      pick[k] = c;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

HolomorphGroup holomorph(const GroupPtr& G, int hol_bound, int aut_bound) {
  std::vector<GroupMap> auts = automorphisms(G, aut_bound);
  const int na = static_cast<int>(auts.size());
  const int n = G->n;
  const long long total = static_cast<long long>(na) * n;
  if (total > hol_bound) throw bound_exceeded("holomorph: |Aut(G)|*|G| exceeds bound");
  // identity automorphism is lexicographically minimal, hence index 0
  const int N = static_cast<int>(total);
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> lab(N);
  // precompute automorphism composition indices
  std::vector<int> comp(static_cast<size_t>(na) * na);
  {
    std::vector<GroupMap> sorted = auts;
    auto index_of = [&](const GroupMap& f) {
      return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), f) -
                              sorted.begin());
    };
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) comp[i * na + j] = index_of(compose(auts[i], auts[j]));
  }
  for (int f = 0; f < na; ++f)
    for (int a = 0; a < n; ++a) {
      int x = f * n + a;
      lab[x] = "(f" + std::to_string(f) + "," + G->labels[a] + ")";
      for (int g = 0; g < na; ++g)
        for (int b = 0; b < n; ++b)
          t[x][g * n + b] = comp[f * na + g] * n + G->mul(a, auts[f][b]);
    }
  HolomorphGroup H;
  H.hol = make_group("Hol(" + G->name + ")", t, lab);
  H.base = G;
  H.auts = std::move(auts);
  return H;
}

std::vector<Subgroup> regular_subgroups(const HolomorphGroup& H, int group_bound) {
  const int n = H.base->n;
  if (n > group_bound) throw bound_exceeded("regular_subgroups: |G| exceeds bound");
  const FiniteGroup& Hol = *H.hol;
  // A subgroup of order n projecting injectively onto G acts freely and
  // transitively, so it is regular, and conversely. Any subgroup of a
  // regular one inherits the injective projection, so closures with a
  // projection collision (two elements with the same action on the
  // identity) or with more than n elements can be pruned outright.
  auto grow = [&](const std::vector<int>& gens) -> std::vector<int> {
    std::vector<char> in(Hol.n, 0);
    std::vector<char> proj(n, 0);
    std::vector<int> frontier;
    auto add = [&](int x) -> bool {
      if (in[x]) return true;
      int p = H.elem_of(x);
      if (proj[p]) return false;
      if (static_cast<int>(frontier.size()) >= n) return false;
      in[x] = 1;
      proj[p] = 1;
      frontier.push_back(x);
      return true;
    };
    if (!add(0)) return {};
    for (int g : gens)
      if (!add(g)) return {};
    for (size_t i = 0; i < frontier.size(); ++i)
      for (size_t k = 0; k < gens.size(); ++k)
        if (!add(Hol.mul(frontier[i], gens[k]))) return {};
    std::vector<int> members;
    for (int x = 0; x < Hol.n; ++x)
      if (in[x]) members.push_back(x);
    return members;
  };
  std::set<std::vector<int>> seen, found;
  struct Frame {
    std::vector<int> members;
    int last;
  };
  std::vector<Frame> stack = {{{0}, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (static_cast<int>(f.members.size()) == n) {
      found.insert(f.members);
      continue;  // extensions would exceed the order bound
    }
    for (int x = f.last + 1; x < Hol.n; ++x) {
      if (std::binary_search(f.members.begin(), f.members.end(), x)) continue;
      std::vector<int> gens = f.members;
      gens.push_back(x);
      std::vector<int> m = grow(gens);
      if (m.empty()) continue;
      if (!seen.insert(m).second) continue;
      stack.push_back({std::move(m), x});
    }
  }
  std::vector<Subgroup> out;
  for (const auto& members : found) {
    Subgroup s;
    s.parent = H.hol;
    s.members = members;
    out.push_back(s);
  }
  return out;
}

}  // namespace braceforge
