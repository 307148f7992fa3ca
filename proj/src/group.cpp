#include "braceforge/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace braceforge {

int FiniteGroup::power(int a, int k) const {
  if (k < 0) return power(inv[a], -k);
  int r = 0;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(int a) const {
  int r = a, ord = 1;
  while (r != 0) {
    r = mul(r, a);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element(const std::string& label) const {
  for (int i = 0; i < n; ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::vector<std::vector<int>> FiniteGroup::table_rows() const {
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rows[a][b] = mul(a, b);
  return rows;
}

GroupMap identity_map(int n) {
  GroupMap f(n);
  std::iota(f.begin(), f.end(), 0);
  return f;
}

GroupMap compose(const GroupMap& f, const GroupMap& g) {
  GroupMap r(g.size());
  for (size_t x = 0; x < g.size(); ++x) r[x] = f[g[x]];
  return r;
}

GroupMap inverse_map(const GroupMap& f) {
  GroupMap r(f.size(), -1);
  for (size_t x = 0; x < f.size(); ++x) r[f[x]] = static_cast<int>(x);
  return r;
}

bool is_bijective(const GroupMap& f) {
  std::vector<char> seen(f.size(), 0);
  for (int v : f) {
    if (v < 0 || v >= static_cast<int>(f.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const GroupMap& f) {
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      if (f[G.mul(a, b)] != H.mul(f[a], f[b])) return false;
  return true;
}

bool is_antihomomorphism(const FiniteGroup& G, const FiniteGroup& H, const GroupMap& f) {
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      if (f[G.mul(a, b)] != H.mul(f[b], f[a])) return false;
  return true;
}

TableDiagnostics verify_group_table(const std::vector<std::vector<int>>& table) {
  TableDiagnostics d;
  const int n = static_cast<int>(table.size());
  if (n == 0) {
    d.axiom = "closure";
    d.message = "empty table";
    return d;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      d.axiom = "closure";
      d.witness = {a, -1, -1};
      d.message = "row " + std::to_string(a) + " has wrong length";
      return d;
    }
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n) {
        d.axiom = "closure";
        d.witness = {a, b, -1};
        d.message = "entry [" + std::to_string(a) + "][" + std::to_string(b) +
                    "] out of range";
        return d;
      }
  }
  for (int a = 0; a < n; ++a)
    if (table[0][a] != a || table[a][0] != a) {
      d.axiom = "identity";
      d.witness = {a, -1, -1};
      d.message = "index 0 is not a two-sided identity at " + std::to_string(a);
      return d;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          d.axiom = "associativity";
          d.witness = {a, b, c};
          d.message = "(a.b).c != a.(b.c) at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")";
          return d;
        }
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n && !found; ++b)
      if (table[a][b] == 0 && table[b][a] == 0) found = true;
    if (!found) {
      d.axiom = "inverse";
      d.witness = {a, -1, -1};
      d.message = "no two-sided inverse for " + std::to_string(a);
      return d;
    }
  }
  d.ok = true;
  return d;
}

GroupPtr make_group(std::string name, const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels) {
  TableDiagnostics d = verify_group_table(table);
  if (!d.ok) throw invalid_input("group '" + name + "': " + d.axiom + ": " + d.message);
  auto g = std::make_shared<FiniteGroup>();
  g->n = static_cast<int>(table.size());
  g->name = std::move(name);
  g->tab.resize(static_cast<size_t>(g->n) * g->n);
  for (int a = 0; a < g->n; ++a)
    for (int b = 0; b < g->n; ++b) g->tab[a * g->n + b] = table[a][b];
  g->inv.assign(g->n, -1);
  for (int a = 0; a < g->n; ++a)
    for (int b = 0; b < g->n; ++b)
      if (g->mul(a, b) == 0 && g->mul(b, a) == 0) {
        g->inv[a] = b;
        break;
      }
  if (static_cast<int>(labels.size()) != g->n) {
    labels.resize(g->n);
    for (int i = 0; i < g->n; ++i)
      if (labels[i].empty()) labels[i] = "g" + std::to_string(i);
  }
  g->labels = std::move(labels);
  return g;
}

GroupPtr cyclic_group(int m) {
  if (m < 1) throw invalid_input("cyclic: order must be positive");
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> lab(m);
  for (int a = 0; a < m; ++a) {
    lab[a] = a == 0 ? "e" : (a == 1 ? "a" : "a" + std::to_string(a));
    for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  }
  return make_group("C" + std::to_string(m), t, lab);
}

namespace {

using Perm = std::vector<int>;

Perm perm_mul(const Perm& p, const Perm& q) {
  // product p.q acts as "p then q": (p.q)(x) = q(p(x)); only internal
  // consistency with the generated labels matters.
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[x] = q[p[x]];
  return r;
}

std::string cycle_label(const Perm& p) {
  const int m = static_cast<int>(p.size());
  std::vector<char> seen(m, 0);
  std::string out;
  for (int s = 0; s < m; ++s) {
    if (seen[s] || p[s] == s) continue;
    out += "(";
    int x = s;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out += " ";
      out += std::to_string(x + 1);
      first = false;
      x = p[x];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

GroupPtr group_from_perms(const std::string& name, std::vector<Perm> elems) {
  // identity first, rest sorted for a stable indexing
  const size_t m = elems[0].size();
  Perm id(m);
  std::iota(id.begin(), id.end(), 0);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto it = std::find(elems.begin(), elems.end(), id);
  std::rotate(elems.begin(), it, it + 1);
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  for (int a = 0; a < n; ++a) {
    lab[a] = cycle_label(elems[a]);
    for (int b = 0; b < n; ++b) t[a][b] = index.at(perm_mul(elems[a], elems[b]));
  }
  return make_group(name, t, lab);
}

std::vector<Perm> all_perms(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

GroupPtr symmetric_group(int m) {
  if (m < 1 || m > 5) throw invalid_input("symmetric: n must be in 1..5");
  return group_from_perms("S" + std::to_string(m), all_perms(m));
}

GroupPtr alternating_group(int m) {
  if (m < 1 || m > 5) throw invalid_input("alternating: n must be in 1..5");
  std::vector<Perm> evens;
  for (const Perm& p : all_perms(m)) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) evens.push_back(p);
  }
  return group_from_perms("A" + std::to_string(m), evens);
}

GroupPtr symmetric3_presented() {
  // elements in the word order e, s1, s2, s1s2, s2s1, s1s2s1 with
  // s1 = (1 2), s2 = (2 3)
  Perm s1 = {1, 0, 2}, s2 = {0, 2, 1};
  std::vector<Perm> elems = {
      {0, 1, 2}, s1, s2, perm_mul(s1, s2), perm_mul(s2, s1),
      perm_mul(perm_mul(s1, s2), s1)};
  std::vector<std::string> lab = {"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"};
  std::map<Perm, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) t[a][b] = index.at(perm_mul(elems[a], elems[b]));
  return make_group("S3", t, lab);
}

GroupPtr dihedral_group(int m) {
  if (m < 1) throw invalid_input("dihedral: n must be positive");
  // elements r^i (0 <= i < m) then s r^i; s r^i . s r^j = r^{j-i}
  const int n = 2 * m;
  auto rot = [m](int x) { return x % m; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  for (int i = 0; i < m; ++i) {
    lab[i] = i == 0 ? "e" : (i == 1 ? "r" : "r" + std::to_string(i));
    lab[m + i] = i == 0 ? "s" : (i == 1 ? "sr" : "sr" + std::to_string(i));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      bool fa = a >= m, fb = b >= m;
      int i = a % m, j = b % m;
      if (!fa && !fb) t[a][b] = rot(i + j);
      else if (!fa && fb) t[a][b] = m + rot(j - i + m);
      else if (fa && !fb) t[a][b] = m + rot(i + j);
      else t[a][b] = rot(j - i + m);
    }
  return make_group("D" + std::to_string(m), t, lab);
}

GroupPtr quaternion_group() {
  // 1, -1, i, -i, j, -j, k, -k
  const std::vector<std::string> lab = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  // base products on {1,i,j,k} with sign: i*i=-1, i*j=k, j*i=-k, ...
  auto base_mul = [&](int a, int b, int& sign) {
    // a,b in {0:1, 1:i, 2:j, 3:k}
    static const int prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    sign = sg[a][b];
    return prod[a][b];
  };
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ba = a / 2, bb = b / 2;
      int sa = a % 2 ? -1 : 1, sb = b % 2 ? -1 : 1;
      int sign;
      int bp = base_mul(ba, bb, sign);
      int s = sa * sb * sign;
      t[a][b] = bp * 2 + (s < 0 ? 1 : 0);
    }
  return make_group("Q8", t, lab);
}

GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B) {
  const int na = A->n, nb = B->n, n = na * nb;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  auto enc = [nb](int a, int b) { return a * nb + b; };
  for (int a1 = 0; a1 < na; ++a1)
    for (int b1 = 0; b1 < nb; ++b1) {
      lab[enc(a1, b1)] = "(" + A->labels[a1] + "," + B->labels[b1] + ")";
      for (int a2 = 0; a2 < na; ++a2)
        for (int b2 = 0; b2 < nb; ++b2)
          t[enc(a1, b1)][enc(a2, b2)] = enc(A->mul(a1, a2), B->mul(b1, b2));
    }
  return make_group(A->name + "x" + B->name, t, lab);
}

GroupPtr direct_power(const GroupPtr& G, int k) {
  if (k < 1) throw invalid_input("direct_power: k must be positive");
  GroupPtr r = G;
  for (int i = 1; i < k; ++i) r = direct_product(r, G);
  return r;
}

GroupPtr semidirect_product(const GroupPtr& H, const GroupPtr& L,
                            const std::vector<GroupMap>& action) {
  const int nh = H->n, nl = L->n;
  if (static_cast<int>(action.size()) != nl)
    throw invalid_input("semidirect: action must assign a map to every element of L");
  for (int l = 0; l < nl; ++l) {
    const GroupMap& f = action[l];
    if (static_cast<int>(f.size()) != nh || !is_bijective(f) ||
        !is_homomorphism(*H, *H, f))
      throw invalid_input("semidirect: action[" + std::to_string(l) +
                          "] is not an automorphism of H");
  }
  for (int l1 = 0; l1 < nl; ++l1)
    for (int l2 = 0; l2 < nl; ++l2)
      if (compose(action[l1], action[l2]) != action[L->mul(l1, l2)])
        throw invalid_input("semidirect: action is not a homomorphism L -> Aut(H)");
  // (h1, l1)(h2, l2) = (h1 . l1(h2), l1 l2)
  const int n = nh * nl;
  auto enc = [nl](int h, int l) { return h * nl + l; };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  std::vector<std::string> lab(n);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int l1 = 0; l1 < nl; ++l1) {
      lab[enc(h1, l1)] = "(" + H->labels[h1] + "," + L->labels[l1] + ")";
      for (int h2 = 0; h2 < nh; ++h2)
        for (int l2 = 0; l2 < nl; ++l2)
          t[enc(h1, l1)][enc(h2, l2)] =
              enc(H->mul(h1, action[l1][h2]), L->mul(l1, l2));
    }
  return make_group(H->name + ":" + L->name, t, lab);
}

GroupPtr opposite_group(const GroupPtr& G) {
  const int n = G->n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = G->mul(b, a);
  return make_group("op(" + G->name + ")", t, G->labels);
}

namespace {

// minimal recursive-descent parser for constructor descriptors
struct DescParser {
  const std::string& s;
  size_t pos = 0;

  explicit DescParser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw invalid_input("descriptor: expected name at position " +
                                          std::to_string(pos));
    return s.substr(start, pos - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw invalid_input(std::string("descriptor: expected '") + c + "'");
    ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw invalid_input("descriptor: expected integer");
    return std::stoi(s.substr(start, pos - start));
  }

  GroupPtr parse() {
    std::string name = ident();
    if (name == "quaternion8") return quaternion_group();
    expect('(');
    GroupPtr out;
    if (name == "cyclic") {
      out = cyclic_group(integer());
    } else if (name == "symmetric") {
      int m = integer();
      out = m == 3 ? symmetric3_presented() : symmetric_group(m);
    } else if (name == "dihedral") {
      out = dihedral_group(integer());
    } else if (name == "direct_product") {
      GroupPtr a = parse();
      expect(',');
      GroupPtr b = parse();
      out = direct_product(a, b);
    } else if (name == "opposite") {
      out = opposite_group(parse());
    } else {
      throw invalid_input("descriptor: unknown constructor '" + name + "'");
    }
    expect(')');
    return out;
  }
};

}  // namespace

GroupPtr build_group(const std::string& expr) {
  DescParser p(expr);
  GroupPtr g = p.parse();
  p.skip_ws();
  if (p.pos != expr.size())
    throw invalid_input("descriptor: trailing characters in '" + expr + "'");
  return g;
}

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<char> in(G.n, 0);
  for (int m : members) {
    if (m < 0 || m >= G.n) return false;
    in[m] = 1;
  }
  if (!in[0]) return false;
  for (int a : members)
    for (int b : members)
      if (!in[G.mul(a, b)]) return false;
  return true;
}

Subgroup subgroup_closure(const GroupPtr& G, const std::vector<int>& generators) {
  std::vector<char> in(G->n, 0);
  in[0] = 1;
  std::vector<int> frontier = {0};
  for (int g : generators)
    if (g < 0 || g >= G->n) throw invalid_input("closure: generator out of range");
  for (int g : generators)
    if (!in[g]) {
      in[g] = 1;
      frontier.push_back(g);
    }
  // right-multiplication by generators reaches every word
  for (size_t i = 0; i < frontier.size(); ++i)
    for (int g : generators) {
      int x = G->mul(frontier[i], g);
      if (!in[x]) {
        in[x] = 1;
        frontier.push_back(x);
      }
    }
  Subgroup s;
  s.parent = G;
  for (int x = 0; x < G->n; ++x)
    if (in[x]) s.members.push_back(x);
  return s;
}

bool is_normal(const Subgroup& S) {
  const FiniteGroup& G = *S.parent;
  for (int g = 0; g < G.n; ++g)
    for (int m : S.members)
      if (!S.contains(G.conj(m, g))) return false;
  return true;
}

std::vector<int> coset_projection(const Subgroup& N) {
  const FiniteGroup& G = *N.parent;
  std::vector<int> rep_of(G.n, -1);     // element -> minimal coset representative
  std::vector<int> reps;
  for (int g = 0; g < G.n; ++g) {
    if (rep_of[g] != -1) continue;
    for (int m : N.members) rep_of[G.mul(g, m)] = g;  // left coset gN
    reps.push_back(g);
  }
  std::vector<int> proj(G.n);
  for (int g = 0; g < G.n; ++g)
    proj[g] = static_cast<int>(std::find(reps.begin(), reps.end(), rep_of[g]) - reps.begin());
  return proj;
}

GroupPtr quotient_group(const Subgroup& N) {
  if (!is_normal(N)) throw invalid_input("quotient: subgroup is not normal");
  const FiniteGroup& G = *N.parent;
  std::vector<int> proj = coset_projection(N);
  const int q = *std::max_element(proj.begin(), proj.end()) + 1;
  std::vector<int> rep(q, -1);
  for (int g = 0; g < G.n; ++g)
    if (rep[proj[g]] == -1) rep[proj[g]] = g;
  std::vector<std::vector<int>> t(q, std::vector<int>(q));
  std::vector<std::string> lab(q);
  for (int a = 0; a < q; ++a) {
    lab[a] = "[" + G.labels[rep[a]] + "]";
    for (int b = 0; b < q; ++b) t[a][b] = proj[G.mul(rep[a], rep[b])];
  }
  return make_group(G.name + "/N", t, lab);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& G) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> out;
  Subgroup triv;
  triv.parent = G;
  triv.members = {0};
  seen.insert(triv.members);
  out.push_back(triv);
  // DFS over closures, extending by generators in increasing order
  struct Frame {
    std::vector<int> members;
    int last;
  };
  std::vector<Frame> stack = {{{0}, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    for (int x = f.last + 1; x < G->n; ++x) {
      if (std::binary_search(f.members.begin(), f.members.end(), x)) continue;
      std::vector<int> gens = f.members;
      gens.push_back(x);
      Subgroup s = subgroup_closure(G, gens);
      if (seen.insert(s.members).second) out.push_back(s);
      stack.push_back({s.members, x});
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<int> center(const FiniteGroup& G) {
  std::vector<int> z;
  for (int a = 0; a < G.n; ++a) {
    bool central = true;
    for (int b = 0; b < G.n && central; ++b)
      if (G.mul(a, b) != G.mul(b, a)) central = false;
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> commutator_subgroup(const GroupPtr& G, const std::vector<int>& A,
                                     const std::vector<int>& B) {
  std::vector<int> gens;
  for (int a : A)
    for (int b : B) gens.push_back(G->comm(a, b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return subgroup_closure(G, gens).members;
}

std::vector<std::pair<Subgroup, Subgroup>> exact_factorizations(const GroupPtr& G,
                                                                int bound) {
  if (G->n > bound) throw bound_exceeded("exact_factorizations: |G| exceeds bound");
  std::vector<Subgroup> subs = all_subgroups(G);
  std::vector<std::pair<Subgroup, Subgroup>> out;
  for (const Subgroup& H : subs)
    for (const Subgroup& L : subs) {
      if (H.order() * L.order() != G->n) continue;
      // H meet L = {e} and HL covers G
      bool trivial_meet = true;
      for (int m : H.members)
        if (m != 0 && L.contains(m)) {
          trivial_meet = false;
          break;
        }
      if (!trivial_meet) continue;
      std::vector<char> hit(G->n, 0);
      int cnt = 0;
      for (int h : H.members)
        for (int l : L.members) {
          int x = G->mul(h, l);
          if (!hit[x]) {
            hit[x] = 1;
            ++cnt;
          }
        }
      if (cnt == G->n) out.emplace_back(H, L);
    }
  return out;
}

namespace {

std::vector<int> derived_series_step(const GroupPtr& G, const std::vector<int>& S) {
  return commutator_subgroup(G, S, S);
}

std::vector<int> all_elements(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

bool is_nilpotent_group(const GroupPtr& G) {
  std::vector<int> g = all_elements(G->n);
  while (true) {
    std::vector<int> next = commutator_subgroup(G, g, all_elements(G->n));
    if (next == g) break;
    g = next;
  }
  return g.size() == 1;
}

bool is_solvable_group(const GroupPtr& G) {
  std::vector<int> d = all_elements(G->n);
  while (true) {
    std::vector<int> next = derived_series_step(G, d);
    if (next == d) break;
    d = next;
  }
  return d.size() == 1;
}

bool is_metabelian_group(const GroupPtr& G) {
  std::vector<int> d1 = derived_series_step(G, all_elements(G->n));
  return derived_series_step(G, d1).size() == 1;
}

// automorphisms() lives in automorphism.cpp; declared here to avoid a header cycle
std::vector<GroupMap> automorphisms(const GroupPtr& G, int bound);

StructureReport structure_report(const GroupPtr& G, int aut_bound) {
  StructureReport r;
  r.is_abelian = G->is_abelian();
  r.center.parent = G;
  r.center.members = center(*G);
  r.is_nilpotent = is_nilpotent_group(G);
  r.is_metabelian = is_metabelian_group(G);
  r.is_solvable = is_solvable_group(G);
  r.aut_order = static_cast<int>(automorphisms(G, aut_bound).size());
  const int inn_order = G->n / static_cast<int>(r.center.members.size());
  r.is_complete = (r.center.members.size() == 1) && (r.aut_order == inn_order);
  return r;
}

namespace {

std::vector<int> order_profile(const FiniteGroup& G) {
  std::vector<int> p(G.n);
  for (int a = 0; a < G.n; ++a) p[a] = G.element_order(a);
  std::sort(p.begin(), p.end());
  return p;
}

// greedy small generating sequence: repeatedly add the first element outside
// the closure so far
std::vector<int> greedy_generators(const GroupPtr& G) {
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

// extension scheme: expr[x] = (parent, generator position) so that the image
// of x is img(parent) . img(gen); roots are the generators themselves
struct WordScheme {
  std::vector<std::pair<int, int>> expr;  // (-1,k): x is generator k; else (p, k)
  std::vector<int> order;                 // evaluation order
};

WordScheme word_scheme(const GroupPtr& G, const std::vector<int>& gens) {
  WordScheme w;
  w.expr.assign(G->n, {-2, -2});
  w.expr[0] = {-1, -1};  // identity
  w.order.push_back(0);
  for (size_t k = 0; k < gens.size(); ++k)
    if (w.expr[gens[k]] == std::make_pair(-2, -2)) {
      w.expr[gens[k]] = {-1, static_cast<int>(k)};
      w.order.push_back(gens[k]);
    }
  for (size_t i = 0; i < w.order.size(); ++i)
    for (size_t k = 0; k < gens.size(); ++k) {
      int x = G->mul(w.order[i], gens[k]);
      if (w.expr[x] == std::make_pair(-2, -2)) {
        w.expr[x] = {w.order[i], static_cast<int>(k)};
        w.order.push_back(x);
      }
    }
  return w;
}

}  // namespace

std::optional<GroupMap> isomorphic(const GroupPtr& G, const GroupPtr& H) {
  if (G->n != H->n) return std::nullopt;
  if (G->is_abelian() != H->is_abelian()) return std::nullopt;
  if (order_profile(*G) != order_profile(*H)) return std::nullopt;
  if (center(*G).size() != center(*H).size()) return std::nullopt;
  const std::vector<int> gens = greedy_generators(G);
  if (gens.empty()) return GroupMap{0};  // both trivial
  const WordScheme scheme = word_scheme(G, gens);
  // candidate images per generator, filtered by element order
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    int ord = G->element_order(gens[k]);
    for (int h = 0; h < H->n; ++h)
      if (H->element_order(h) == ord) cand[k].push_back(h);
  }
  std::vector<int> pick(gens.size(), -1);
  GroupMap img;
  std::optional<GroupMap> found;
  auto build_and_check = [&]() -> bool {
    img.assign(G->n, -1);
    for (int x : scheme.order) {
      auto [p, k] = scheme.expr[x];
      if (x == 0) img[0] = 0;
      else if (p == -1) img[x] = pick[k];
      else img[x] = H->mul(img[p], pick[k]);
    }
    if (!is_bijective(img)) return false;
    return is_homomorphism(*G, *H, img);
  };
  auto rec = [&](auto&& self, size_t k) -> bool {
    if (k == gens.size()) return build_and_check();
    for (int c : cand[k]) {
      pick[k] = c;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  if (rec(rec, 0)) return img;
  return std::nullopt;
}

std::string group_content_hash(const FiniteGroup& G) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<uint64_t>(G.n));
  for (int v : G.tab) mix(static_cast<uint64_t>(v));
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace braceforge
