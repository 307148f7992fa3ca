#include "braceforge/rb_operator.hpp"

#include <algorithm>
#include <map>

#include "braceforge/parallel.hpp"

namespace braceforge {

PairCheck is_rb_operator(const FiniteGroup& G, const GroupMap& B, int weight) {
  PairCheck r;
  for (int g = 0; g < G.n; ++g) {
    const int bg = B[g];
    for (int h = 0; h < G.n; ++h) {
      int lhs = G.mul(bg, B[h]);
      int arg = weight == 1
                    ? G.mul(G.mul(G.mul(g, bg), h), G.inverse(bg))
                    : G.mul(G.mul(G.mul(bg, h), G.inverse(bg)), g);
      if (lhs != B[arg]) {
        r.ok = false;
        r.witness = {g, h};
        return r;
      }
    }
  }
  return r;
}

RbOperator rb_zero(const GroupPtr& G) {
  return {G, GroupMap(G->n, 0), 1};
}

RbOperator rb_inverse(const GroupPtr& G) {
  GroupMap f(G->n);
  for (int g = 0; g < G->n; ++g) f[g] = G->inverse(g);
  return {G, f, 1};
}

namespace {

// Every pair (a,b) with a,b <= upto whose identity target
// a B(a) b B(a)^{-1} is also <= upto must satisfy the identity;
// pairs with unassigned targets are deferred to later levels.
bool rb_partial_ok(const FiniteGroup& G, const GroupMap& B, int upto) {
  for (int a = 0; a <= upto; ++a) {
    const int ba = B[a];
    for (int b = 0; b <= upto; ++b) {
      int arg = G.mul(G.mul(G.mul(a, ba), b), G.inverse(ba));
      if (arg > upto) continue;
      if (G.mul(ba, B[b]) != B[arg]) return false;
    }
  }
  return true;
}

void rb_search(const FiniteGroup& G, GroupMap& B, int next,
               std::vector<GroupMap>& out) {
  if (next == G.n) {
    out.push_back(B);
    return;
  }
  for (int img = 0; img < G.n; ++img) {
    B[next] = img;
    if (rb_partial_ok(G, B, next)) rb_search(G, B, next + 1, out);
  }
  B[next] = -1;
}

}  // namespace

std::vector<RbOperator> enumerate_rb_operators(const GroupPtr& G, int bound, int jobs) {
  if (G->n > bound) throw bound_exceeded("enumerate_rb_operators: |G| exceeds bound");
  const int n = G->n;
  std::vector<GroupMap> maps;
  if (n == 1) {
    maps.push_back({0});
  } else if (jobs <= 1) {
    GroupMap B(n, -1);
    B[0] = 0;  // forced: B(e)B(e) = B(e)
    rb_search(*G, B, 1, maps);
  } else {
    // partition on the image of the first non-identity element
    auto chunks = run_indexed<std::vector<GroupMap>>(
        n,
        [&](size_t img) {
          std::vector<GroupMap> part;
          GroupMap B(n, -1);
          B[0] = 0;
          B[1] = static_cast<int>(img);
          if (rb_partial_ok(*G, B, 1)) rb_search(*G, B, 2, part);
          return part;
        },
        jobs);
    for (auto& c : chunks)
      for (auto& m : c) maps.push_back(std::move(m));
  }
  std::vector<RbOperator> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.push_back({G, std::move(m), 1});
  return out;
}

RbOperator transform_rb(const RbOperator& B, RbTransform kind, const GroupMap* phi) {
  const FiniteGroup& G = *B.group;
  RbOperator out;
  out.group = B.group;
  out.images.resize(G.n);
  out.weight = B.weight;
  switch (kind) {
    case RbTransform::tilde:
      if (B.weight != 1) throw invalid_input("tilde: defined for weight 1");
      for (int g = 0; g < G.n; ++g)
        out.images[g] = G.mul(G.inverse(g), B.images[G.inverse(g)]);
      break;
    case RbTransform::aut_conj: {
      if (phi == nullptr) throw invalid_input("aut_conj: automorphism required");
      if (!is_bijective(*phi) || !is_homomorphism(G, G, *phi))
        throw invalid_input("aut_conj: phi is not an automorphism");
      GroupMap phi_inv = inverse_map(*phi);
      for (int g = 0; g < G.n; ++g) out.images[g] = phi_inv[B.images[(*phi)[g]]];
      break;
    }
    case RbTransform::weight_swap:
      for (int g = 0; g < G.n; ++g) out.images[g] = B.images[G.inverse(g)];
      out.weight = -B.weight;
      break;
  }
  PairCheck c = is_rb_operator(G, out.images, out.weight);
  if (!c.ok)
    throw internal_error("transform_rb: transformed map failed verification at (" +
                         std::to_string(c.witness[0]) + "," +
                         std::to_string(c.witness[1]) + ")");
  return out;
}

namespace {

RbOperator verified(const GroupPtr& G, GroupMap images, const char* what) {
  PairCheck c = is_rb_operator(*G, images, 1);
  if (!c.ok)
    throw internal_error(std::string(what) + ": constructed map failed verification at (" +
                         std::to_string(c.witness[0]) + "," +
                         std::to_string(c.witness[1]) + ")");
  return {G, std::move(images), 1};
}

}  // namespace

RbOperator splitting_rb(const GroupPtr& G, const Subgroup& H, const Subgroup& L) {
  const int n = G->n;
  GroupMap images(n, -1);
  for (int h : H.members)
    for (int l : L.members) {
      int g = G->mul(h, l);
      if (images[g] != -1)
        throw invalid_input("splitting: factorization is not exact (duplicate h*l)");
      images[g] = G->inverse(l);
    }
  for (int g = 0; g < n; ++g)
    if (images[g] == -1)
      throw invalid_input("splitting: H*L does not cover G");
  return verified(G, std::move(images), "splitting");
}

RbOperator triangular_rb(const GroupPtr& G, const Subgroup& H, const Subgroup& L,
                         const Subgroup& M, const GroupMap& C) {
  auto meet_trivial = [&](const Subgroup& A, const Subgroup& B) {
    for (int m : A.members)
      if (m != 0 && B.contains(m)) return false;
    return true;
  };
  if (!meet_trivial(H, L) || !meet_trivial(H, M) || !meet_trivial(L, M))
    throw invalid_input("triangular: subgroup intersections are not trivial");
  for (int h : H.members)
    for (int l : L.members)
      if (G->comm(h, l) != 0) throw invalid_input("triangular: [H,L] != {e}");
  for (int l : L.members)
    for (int m : M.members)
      if (G->comm(C[l], m) != 0) throw invalid_input("triangular: [C(L),M] != {e}");
  for (int l : L.members) {
    if (!L.contains(C[l])) throw invalid_input("triangular: C does not map L into L");
    for (int l2 : L.members) {
      int arg = G->mul(G->mul(G->mul(l, C[l]), l2), G->inverse(C[l]));
      if (G->mul(C[l], C[l2]) != C[arg])
        throw invalid_input("triangular: C is not an RB operator on L");
    }
  }
  GroupMap images(G->n, -1);
  for (int h : H.members)
    for (int l : L.members)
      for (int m : M.members) {
        int g = G->mul(G->mul(h, l), m);
        if (images[g] != -1)
          throw invalid_input("triangular: decomposition G = HLM is not unique");
        images[g] = G->mul(C[l], G->inverse(m));
      }
  for (int g = 0; g < G->n; ++g)
    if (images[g] == -1) throw invalid_input("triangular: HLM does not cover G");
  return verified(G, std::move(images), "triangular");
}

RbOperator semidirect_rb(const GroupPtr& G, const Subgroup& H, const Subgroup& L,
                         const GroupMap& C) {
  if (!is_normal(H)) throw invalid_input("semidirect: H is not normal");
  for (int m : H.members)
    if (m != 0 && L.contains(m))
      throw invalid_input("semidirect: H and L intersect nontrivially");
  for (int l : L.members) {
    if (!L.contains(C[l])) throw invalid_input("semidirect: C does not map L into L");
    for (int l2 : L.members) {
      int arg = G->mul(G->mul(G->mul(l, C[l]), l2), G->inverse(C[l]));
      if (G->mul(C[l], C[l2]) != C[arg])
        throw invalid_input("semidirect: C is not an RB operator on L");
    }
  }
  GroupMap images(G->n, -1);
  for (int h : H.members)
    for (int l : L.members) {
      int g = G->mul(h, l);
      if (images[g] != -1)
        throw invalid_input("semidirect: decomposition G = HL is not unique");
      images[g] = C[l];
    }
  for (int g = 0; g < G->n; ++g)
    if (images[g] == -1) throw invalid_input("semidirect: HL does not cover G");
  return verified(G, std::move(images), "semidirect");
}

RbOperator hom_rb(const GroupPtr& G, const GroupMap& f) {
  if (static_cast<int>(f.size()) != G->n) throw invalid_input("hom_rb: map size mismatch");
  std::vector<int> image;
  for (int g = 0; g < G->n; ++g) image.push_back(f[g]);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (!is_subgroup(*G, image))
    throw invalid_input("hom_rb: image is not a subgroup");
  for (int a : image)
    for (int b : image)
      if (G->mul(a, b) != G->mul(b, a))
        throw invalid_input("hom_rb: image is not abelian");
  if (!is_homomorphism(*G, *G, f) && !is_antihomomorphism(*G, *G, f))
    throw invalid_input("hom_rb: map is neither a homomorphism nor an antihomomorphism");
  return verified(G, f, "hom_rb");
}

GroupPtr derived_circle_group(const RbOperator& B) {
  const FiniteGroup& G = *B.group;
  if (B.weight != 1) throw invalid_input("derived_circle_group: weight must be 1");
  const int n = G.n;
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g) {
    const int bg = B.images[g];
    for (int h = 0; h < n; ++h)
      t[g][h] = G.mul(G.mul(G.mul(g, bg), h), G.inverse(bg));
  }
  GroupPtr circ;
  try {
    circ = make_group(G.name + "_circ", t, G.labels);
  } catch (const invalid_input& e) {
    throw internal_error(std::string("derived_circle_group: circle product is not a group: ") +
                         e.what());
  }
  // B is a homomorphism (G,o) -> (G,.) and an RB operator on (G,o)
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (B.images[circ->mul(g, h)] != G.mul(B.images[g], B.images[h]))
        throw internal_error("derived_circle_group: B is not a circle homomorphism");
  PairCheck c = is_rb_operator(*circ, B.images, 1);
  if (!c.ok)
    throw internal_error("derived_circle_group: B is not an RB operator on (G,o)");
  return circ;
}

RbCriteria rb_criteria(const RbOperator& B) {
  const FiniteGroup& G = *B.group;
  RbCriteria r;
  r.abelian_circ = true;
  r.hom_property = true;
  r.direct_solution = true;
  for (int x = 0; x < G.n && r.abelian_circ; ++x)
    for (int y = 0; y < G.n; ++y) {
      int lhs = G.mul(G.comm(y, G.inverse(B.images[x])),
                      G.comm(G.inverse(B.images[y]), x));
      if (lhs != G.comm(y, x)) {
        r.abelian_circ = false;
        r.abelian_circ_witness = {x, y};
        break;
      }
    }
  for (int g = 0; g < G.n && r.hom_property; ++g)
    for (int h = 0; h < G.n; ++h) {
      int circ = G.mul(G.mul(G.mul(g, B.images[g]), h), G.inverse(B.images[g]));
      if (B.images[circ] != G.mul(B.images[g], B.images[h])) {
        r.hom_property = false;
        r.hom_witness = {g, h};
        break;
      }
    }
  for (int b = 0; b < G.n && r.direct_solution; ++b)
    for (int c = 0; c < G.n; ++c) {
      int lhs = G.conj(G.inverse(B.images[b]), B.images[c]);
      int rhs = B.images[G.conj(b, B.images[c])];
      if (lhs != rhs) {
        r.direct_solution = false;
        r.direct_solution_witness = {b, c};
        break;
      }
    }
  return r;
}

RbOrbitPartition classify_rb_orbits(const GroupPtr& G,
                                    const std::vector<RbOperator>& ops,
                                    const std::vector<GroupMap>& auts) {
  std::map<GroupMap, int> index;
  for (size_t i = 0; i < ops.size(); ++i) index[ops[i].images] = static_cast<int>(i);
  std::vector<GroupMap> aut_invs;
  for (const GroupMap& a : auts) aut_invs.push_back(inverse_map(a));
  std::vector<int> orbit_of(ops.size(), -1);
  RbOrbitPartition part;
  for (size_t i = 0; i < ops.size(); ++i) {
    if (orbit_of[i] != -1) continue;
    std::vector<int> orbit;
    std::vector<int> queue = {static_cast<int>(i)};
    orbit_of[i] = static_cast<int>(part.orbits.size());
    while (!queue.empty()) {
      int cur = queue.back();
      queue.pop_back();
      orbit.push_back(cur);
      for (size_t a = 0; a < auts.size(); ++a) {
        GroupMap img(G->n);
        for (int g = 0; g < G->n; ++g)
          img[g] = aut_invs[a][ops[cur].images[auts[a][g]]];
        auto it = index.find(img);
        if (it == index.end())
          throw internal_error("classify_rb_orbits: conjugate missing from operator list");
        if (orbit_of[it->second] == -1) {
          orbit_of[it->second] = orbit_of[i];
          queue.push_back(it->second);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    GroupMap canon = ops[orbit[0]].images;
    for (int idx : orbit) canon = std::min(canon, ops[idx].images);
    part.orbits.push_back(std::move(orbit));
    part.canonical.push_back(std::move(canon));
  }
  // tilde pairing: orbit containing the tilde transform of each representative
  part.tilde_partner.resize(part.orbits.size());
  for (size_t o = 0; o < part.orbits.size(); ++o) {
    const RbOperator& rep = ops[part.orbits[o][0]];
    RbOperator t = transform_rb(rep, RbTransform::tilde);
    auto it = index.find(t.images);
    if (it == index.end())
      throw internal_error("classify_rb_orbits: tilde transform missing from operator list");
    part.tilde_partner[o] = orbit_of[it->second];
  }
  return part;
}

}  // namespace braceforge
