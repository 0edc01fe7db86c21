#include "dgq/builders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace dgq {

namespace {

DoubleGroupoid from_sides(Groupoid h, Groupoid v, const std::vector<std::array<Id, 4>>& sides,
                          const std::function<Id(Id, Id)>& hcomp, const std::function<Id(Id, Id)>& vcomp) {
  const Id n = static_cast<Id>(sides.size());
  std::vector<Id> top(n), bottom(n), left(n), right(n);
  for (Id i = 0; i < n; ++i) {
    top[i] = sides[i][0];
    left[i] = sides[i][1];
    right[i] = sides[i][2];
    bottom[i] = sides[i][3];
  }
  std::vector<Id> hc(static_cast<std::size_t>(n) * n, kNone), vc(static_cast<std::size_t>(n) * n, kNone);
  for (Id a = 0; a < n; ++a)
    for (Id c = 0; c < n; ++c) {
      if (right[a] == left[c]) hc[static_cast<std::size_t>(a) * n + c] = hcomp(a, c);
      if (bottom[a] == top[c]) vc[static_cast<std::size_t>(a) * n + c] = vcomp(a, c);
    }
  return DoubleGroupoid::assemble(std::move(h), std::move(v), std::move(top), std::move(bottom),
                                  std::move(left), std::move(right), std::move(hc), std::move(vc));
}

}  // namespace

DoubleGroupoid thin_double_groupoid(Groupoid horizontal, Groupoid vertical,
                                    const std::vector<std::array<Id, 4>>& boundaries) {
  std::map<std::array<Id, 4>, Id> index;
  for (std::size_t i = 0; i < boundaries.size(); ++i) {
    if (!index.emplace(boundaries[i], static_cast<Id>(i)).second)
      throw std::invalid_argument("thin_double_groupoid: repeated boundary");
  }
  auto lookup = [&](std::array<Id, 4> key) {
    for (Id k : key)
      if (k == kNone) return kNone;
    auto it = index.find(key);
    return it == index.end() ? kNone : it->second;
  };
  const Groupoid& h = horizontal;
  const Groupoid& v = vertical;
  auto hcomp = [&](Id a, Id c) {
    const auto& x = boundaries[a];
    const auto& y = boundaries[c];
    return lookup({h.compose(x[0], y[0]), x[1], y[2], h.compose(x[3], y[3])});
  };
  auto vcomp = [&](Id a, Id c) {
    const auto& x = boundaries[a];
    const auto& y = boundaries[c];
    return lookup({x[0], v.compose(x[1], y[1]), v.compose(x[2], y[2]), y[3]});
  };
  return from_sides(horizontal, vertical, boundaries, hcomp, vcomp);
}

DoubleGroupoid discrete_double_groupoid(Id points) {
  std::vector<std::array<Id, 4>> sides;
  for (Id p = 0; p < points; ++p) sides.push_back({p, p, p, p});
  return thin_double_groupoid(discrete_groupoid(points), discrete_groupoid(points), sides);
}

DoubleGroupoid commuting_squares(const Groupoid& g, const std::vector<bool>& horizontal,
                                 const std::vector<bool>& vertical) {
  auto [h, hmap] = wide_subgroupoid(g, horizontal);
  auto [v, vmap] = wide_subgroupoid(g, vertical);
  std::vector<Id> hback(g.num_arrows(), kNone);
  for (Id i = 0; i < h.num_arrows(); ++i) hback[hmap[i]] = i;
  std::vector<std::array<Id, 4>> sides;
  for (Id t = 0; t < h.num_arrows(); ++t)
    for (Id l : v.arrows_from(h.source(t)))
      for (Id r : v.arrows_from(h.target(t))) {
        Id bottom = g.compose(g.compose(g.inverse(vmap[l]), hmap[t]), vmap[r]);
        if (hback[bottom] != kNone) sides.push_back({t, l, r, hback[bottom]});
      }
  return thin_double_groupoid(std::move(h), std::move(v), sides);
}

Id NoSiempre::point(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::out_of_range("no point named " + name);
  return static_cast<Id>(it - names.begin());
}

NoSiempre no_siempre(Id m, Id n) {
  if (m < 1 || n < 0) throw std::invalid_argument("no_siempre: need m >= 1, n >= 0");
  const Id k = 3 + m + n;
  std::vector<std::string> names{"P", "Q", "R"};
  for (Id j = 1; j <= m; ++j) names.push_back("S" + std::to_string(j));
  for (Id i = 1; i <= n; ++i) names.push_back("T" + std::to_string(i));
  // Block labels: horizontal {P,Q,T} = 0, {R,S} = 1; vertical {P,R} = 0, {Q,S,T} = 1.
  auto hblock = [&](Id p) { return (p == 2 || (p >= 3 && p < 3 + m)) ? 1 : 0; };
  auto vblock = [&](Id p) { return (p == 0 || p == 2) ? 0 : 1; };
  Groupoid g = coarse_groupoid(k);
  std::vector<bool> hm(g.num_arrows()), vm(g.num_arrows());
  for (Id i = 0; i < k; ++i)
    for (Id j = 0; j < k; ++j) {
      hm[i * k + j] = hblock(i) == hblock(j);
      vm[i * k + j] = vblock(i) == vblock(j);
    }
  NoSiempre out{commuting_squares(g, hm, vm), kNone, names};
  const DoubleGroupoid& t = out.dgpd;
  const Id s1 = 3;
  for (Id a = 0; a < t.num_boxes(); ++a)
    if (t.tl(a) == 0 && t.tr(a) == 1 && t.bl(a) == 2 && t.br(a) == s1) out.box_a = a;
  return out;
}

DoubleGroupoid matched_pair(const MatchedPairData& d) {
  const Groupoid& h = d.horizontal;
  const Groupoid& v = d.vertical;
  const Id nv = v.num_arrows();
  std::vector<Id> index(static_cast<std::size_t>(h.num_arrows()) * nv, kNone);
  std::vector<std::pair<Id, Id>> boxes;
  std::vector<std::array<Id, 4>> sides;
  for (Id x = 0; x < h.num_arrows(); ++x)
    for (Id g : v.arrows_from(h.target(x))) {
      index[static_cast<std::size_t>(x) * nv + g] = static_cast<Id>(boxes.size());
      boxes.emplace_back(x, g);
      const std::size_t k = static_cast<std::size_t>(x) * nv + g;
      sides.push_back({x, d.left_of[k], g, d.right_of[k]});
    }
  auto at = [&](Id x, Id g) {
    if (x == kNone || g == kNone) return kNone;
    return index[static_cast<std::size_t>(x) * nv + g];
  };
  // (x, g) over (x <| g, g') = (x, g g')
  auto vcomp = [&](Id a, Id c) { return at(boxes[a].first, v.compose(boxes[a].second, boxes[c].second)); };
  // (x, x' |> g') | (x', g') = (x x', g')
  auto hcomp = [&](Id a, Id c) { return at(h.compose(boxes[a].first, boxes[c].first), boxes[c].second); };
  return from_sides(h, v, sides, hcomp, vcomp);
}

MatchedPairData matched_pair_from_factorization(const Groupoid& group, const std::vector<bool>& h_subgroup,
                                                const std::vector<bool>& v_subgroup) {
  if (!is_group(group)) throw std::invalid_argument("matched_pair_from_factorization: not a group");
  auto [h, hmap] = wide_subgroupoid(group, h_subgroup);
  auto [v, vmap] = wide_subgroupoid(group, v_subgroup);
  const Id n = group.num_arrows();
  // factor[z] = (g, x) with z = g x, g in V, x in H
  std::vector<std::pair<Id, Id>> factor(n, {kNone, kNone});
  for (Id g = 0; g < v.num_arrows(); ++g)
    for (Id x = 0; x < h.num_arrows(); ++x) {
      Id z = group.compose(vmap[g], hmap[x]);
      if (factor[z].first != kNone)
        throw std::invalid_argument("matched_pair_from_factorization: factorization is not unique");
      factor[z] = {g, x};
    }
  for (Id z = 0; z < n; ++z)
    if (factor[z].first == kNone)
      throw std::invalid_argument("matched_pair_from_factorization: V.H is not the whole group");
  MatchedPairData d{h, v, {}, {}};
  const std::size_t cells = static_cast<std::size_t>(h.num_arrows()) * v.num_arrows();
  d.left_of.assign(cells, kNone);
  d.right_of.assign(cells, kNone);
  for (Id x = 0; x < h.num_arrows(); ++x)
    for (Id g = 0; g < v.num_arrows(); ++g) {
      auto [g2, x2] = factor[group.compose(hmap[x], vmap[g])];
      d.left_of[static_cast<std::size_t>(x) * v.num_arrows() + g] = g2;
      d.right_of[static_cast<std::size_t>(x) * v.num_arrows() + g] = x2;
    }
  return d;
}

DoubleGroupoid bimodule_dgpd(const Groupoid& g) {
  const Id p = g.num_objects();
  const Id n = g.num_arrows();
  std::vector<std::array<Id, 4>> sides;
  for (Id a = 0; a < n; ++a)
    for (Id c = 0; c < n; ++c)
      sides.push_back({g.source(a) * p + g.source(c), a, c, g.target(a) * p + g.target(c)});
  return thin_double_groupoid(coarse_groupoid(p), g, sides);
}

DoubleGroupoid vec_g_double_groupoid(const Groupoid& group) {
  if (!is_group(group)) throw std::invalid_argument("vec_g_double_groupoid: not a group");
  const Id n = group.num_arrows();
  std::vector<Id> act(static_cast<std::size_t>(n) * n);
  for (Id a = 0; a < n; ++a)
    for (Id g = 0; g < n; ++g) act[a * n + g] = group.compose(a, g);
  Groupoid v = transformation_groupoid(group, n, act);
  std::vector<std::array<Id, 4>> sides;
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b)
      for (Id g = 0; g < n; ++g)
        sides.push_back({a * n + b, a * n + g, b * n + g, act[a * n + g] * n + act[b * n + g]});
  return thin_double_groupoid(coarse_groupoid(n), std::move(v), sides);
}

VecGOmega vec_g_omega(const ThreeCocycle& omega) {
  return {vec_g_double_groupoid(omega.group), sigma_from_omega(omega)};
}

DoubleGroupoid comma(const Groupoid& group, const std::vector<bool>& subgroup) {
  if (!is_group(group)) throw std::invalid_argument("comma: not a group");
  auto [f, fmap] = wide_subgroupoid(group, subgroup);
  std::vector<Id> fback(group.num_arrows(), kNone);
  for (Id i = 0; i < f.num_arrows(); ++i) fback[fmap[i]] = i;
  std::vector<std::array<Id, 4>> sides;
  for (Id g = 0; g < group.num_arrows(); ++g)
    for (Id i = 0; i < f.num_arrows(); ++i)
      for (Id j = 0; j < f.num_arrows(); ++j) {
        Id h = group.compose(group.compose(group.inverse(fmap[i]), g), fmap[j]);
        sides.push_back({g, i, j, h});
      }
  return thin_double_groupoid(group, std::move(f), sides);
}

DoubleGroupoid identity_union(const Groupoid& horizontal, const Groupoid& vertical) {
  std::vector<std::array<Id, 4>> sides;
  for (Id x = 0; x < horizontal.num_arrows(); ++x) {
    Id gl = vertical.identity(horizontal.source(x));
    Id gr = vertical.identity(horizontal.target(x));
    sides.push_back({x, gl, gr, x});
  }
  for (Id g = 0; g < vertical.num_arrows(); ++g) {
    if (vertical.is_identity(g)) continue;
    sides.push_back({horizontal.identity(vertical.source(g)), g, g, horizontal.identity(vertical.target(g))});
  }
  return thin_double_groupoid(horizontal, vertical, sides);
}

Groupoid group_fixture(const std::string& name) {
  if (name == "coarse2") return coarse_groupoid(2);
  if (name == "A3") return cyclic_group(3);
  if (name.size() >= 2 && (name[0] == 'C' || name[0] == 'S')) {
    int k = 0;
    try {
      k = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      k = 0;
    }
    if (name[0] == 'C' && k >= 1 && k <= 9) return cyclic_group(k);
    if (name[0] == 'S' && k >= 1 && k <= 4) return symmetric_group(k);
  }
  throw std::invalid_argument("unknown group fixture: " + name);
}

std::vector<bool> subgroup_fixture(const std::string& group, const std::string& subgroup) {
  Groupoid g = group_fixture(group);
  std::vector<bool> mask(g.num_arrows(), false);
  if (subgroup == group) {
    mask.assign(g.num_arrows(), true);
    return mask;
  }
  if (subgroup == "C1" || subgroup == "S1") {
    mask[0] = true;
    return mask;
  }
  if (group == "S3") {
    // Elements of S3 in lexicographic order: 012, 021, 102, 120, 201, 210.
    if (subgroup == "S2" || subgroup == "C2") {
      mask[0] = mask[2] = true;
      return mask;
    }
    if (subgroup == "A3" || subgroup == "C3") {
      mask[0] = mask[3] = mask[4] = true;
      return mask;
    }
  }
  throw std::invalid_argument("unknown subgroup fixture: " + subgroup + " in " + group);
}

}  // namespace dgq
