#include "dgq/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dgq {

namespace {

bool in_range(Id v, Id n) { return v >= 0 && v < n; }

}  // namespace

Groupoid::Groupoid(Id num_objects, std::vector<Id> source, std::vector<Id> target, std::vector<Id> identity,
                   std::vector<Id> inverse, std::vector<Id> compose)
    : num_objects_(num_objects),
      source_(std::move(source)),
      target_(std::move(target)),
      identity_(std::move(identity)),
      inverse_(std::move(inverse)),
      compose_(std::move(compose)) {
  index();
}

Groupoid Groupoid::from_composition(Id num_objects, std::vector<Id> source, std::vector<Id> target,
                                    std::vector<Id> compose) {
  const Id n = static_cast<Id>(source.size());
  std::vector<Id> identity(static_cast<std::size_t>(num_objects), kNone);
  std::vector<Id> inverse(static_cast<std::size_t>(n), kNone);
  auto comp = [&](Id f, Id g) { return compose[static_cast<std::size_t>(f) * n + g]; };
  for (Id f = 0; f < n; ++f) {
    if (!in_range(source[f], num_objects) || source[f] != target[f]) continue;
    if (comp(f, f) == f && identity[source[f]] == kNone) identity[source[f]] = f;
  }
  for (Id f = 0; f < n; ++f) {
    if (!in_range(source[f], num_objects) || !in_range(target[f], num_objects)) continue;
    Id want = identity[source[f]];
    if (want == kNone) continue;
    for (Id g = 0; g < n; ++g) {
      if (source[g] == target[f] && comp(f, g) == want) {
        inverse[f] = g;
        break;
      }
    }
  }
  return Groupoid(num_objects, std::move(source), std::move(target), std::move(identity), std::move(inverse),
                  std::move(compose));
}

Groupoid Groupoid::from_composition(Id num_objects, std::vector<Id> source, std::vector<Id> target,
                                    const std::function<Id(Id, Id)>& compose) {
  const Id n = static_cast<Id>(source.size());
  std::vector<Id> table(static_cast<std::size_t>(n) * n, kNone);
  for (Id f = 0; f < n; ++f)
    for (Id g = 0; g < n; ++g)
      if (target[f] == source[g]) table[static_cast<std::size_t>(f) * n + g] = compose(f, g);
  return from_composition(num_objects, std::move(source), std::move(target), std::move(table));
}

void Groupoid::index() {
  from_offsets_.assign(static_cast<std::size_t>(num_objects_) + 1, 0);
  to_offsets_.assign(static_cast<std::size_t>(num_objects_) + 1, 0);
  from_list_.clear();
  to_list_.clear();
  const Id n = num_arrows();
  if (static_cast<Id>(target_.size()) != n) return;
  for (Id f = 0; f < n; ++f) {
    if (in_range(source_[f], num_objects_)) ++from_offsets_[source_[f] + 1];
    if (in_range(target_[f], num_objects_)) ++to_offsets_[target_[f] + 1];
  }
  std::partial_sum(from_offsets_.begin(), from_offsets_.end(), from_offsets_.begin());
  std::partial_sum(to_offsets_.begin(), to_offsets_.end(), to_offsets_.begin());
  from_list_.resize(static_cast<std::size_t>(from_offsets_.back()));
  to_list_.resize(static_cast<std::size_t>(to_offsets_.back()));
  std::vector<Id> fpos(from_offsets_.begin(), from_offsets_.end() - 1);
  std::vector<Id> tpos(to_offsets_.begin(), to_offsets_.end() - 1);
  for (Id f = 0; f < n; ++f) {
    if (in_range(source_[f], num_objects_)) from_list_[fpos[source_[f]]++] = f;
    if (in_range(target_[f], num_objects_)) to_list_[tpos[target_[f]]++] = f;
  }
}

std::span<const Id> Groupoid::arrows_from(Id p) const {
  return std::span<const Id>(from_list_).subspan(from_offsets_[p], from_offsets_[p + 1] - from_offsets_[p]);
}

std::span<const Id> Groupoid::arrows_to(Id p) const {
  return std::span<const Id>(to_list_).subspan(to_offsets_[p], to_offsets_[p + 1] - to_offsets_[p]);
}

ValidationReport validate_groupoid(const Groupoid& g) {
  ValidationReport rep;
  const Id n = g.num_arrows();
  const Id m = g.num_objects();
  if (static_cast<Id>(g.targets().size()) != n || static_cast<Id>(g.inverses().size()) != n ||
      static_cast<Id>(g.identities().size()) != m ||
      g.composition().size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    rep.broken("table-size", {});
    return rep;
  }
  for (Id f = 0; f < n; ++f) {
    if (!in_range(g.source(f), m)) rep.broken("dangling-source", {f});
    if (!in_range(g.target(f), m)) rep.broken("dangling-target", {f});
    if (g.inverse(f) != kNone && !in_range(g.inverse(f), n)) rep.broken("dangling-inverse", {f});
  }
  for (Id p = 0; p < m; ++p)
    if (g.identity(p) != kNone && !in_range(g.identity(p), n)) rep.broken("dangling-identity", {p});
  for (Id f = 0; f < n; ++f)
    for (Id h = 0; h < n; ++h)
      if (g.compose(f, h) != kNone && !in_range(g.compose(f, h), n)) rep.broken("dangling-composite", {f, h});
  if (!rep.structural.empty()) {
    rep.sort();
    return rep;
  }

  for (Id f = 0; f < n; ++f)
    for (Id h = 0; h < n; ++h) {
      Id c = g.compose(f, h);
      bool composable = g.target(f) == g.source(h);
      if ((c != kNone) != composable) {
        rep.fail("compose-domain", {f, h});
        continue;
      }
      if (c != kNone && (g.source(c) != g.source(f) || g.target(c) != g.target(h)))
        rep.fail("compose-ends", {f, h, c});
    }
  for (Id f = 0; f < n; ++f)
    for (Id h : g.arrows_from(g.target(f))) {
      Id fh = g.compose(f, h);
      if (fh == kNone) continue;
      for (Id k : g.arrows_from(g.target(h))) {
        Id hk = g.compose(h, k);
        if (hk == kNone) continue;
        Id lhs = g.compose(fh, k);
        Id rhs = g.compose(f, hk);
        if (lhs != rhs) rep.fail("associativity", {f, h, k});
      }
    }
  bool identities_ok = true;
  for (Id p = 0; p < m; ++p) {
    Id e = g.identity(p);
    if (e == kNone) {
      rep.fail("identity-missing", {p});
      identities_ok = false;
      continue;
    }
    if (g.source(e) != p || g.target(e) != p) rep.fail("identity-ends", {p, e});
  }
  if (identities_ok) {
    for (Id f = 0; f < n; ++f) {
      if (g.compose(g.identity(g.source(f)), f) != f || g.compose(f, g.identity(g.target(f))) != f)
        rep.fail("unit", {f});
      Id inv = g.inverse(f);
      if (inv == kNone) {
        rep.fail("inverse-missing", {f});
        continue;
      }
      if (g.compose(f, inv) != g.identity(g.source(f)) || g.compose(inv, f) != g.identity(g.target(f)))
        rep.fail("inverse", {f, inv});
    }
  }
  rep.sort();
  return rep;
}

std::vector<Id> component_index(const Groupoid& g) {
  std::vector<Id> parent(static_cast<std::size_t>(g.num_objects()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Id(Id)> find = [&](Id x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (Id f = 0; f < g.num_arrows(); ++f) {
    Id a = find(g.source(f)), b = find(g.target(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<Id> comp(parent.size(), kNone);
  Id next = 0;
  std::map<Id, Id> root_to_comp;
  for (Id p = 0; p < g.num_objects(); ++p) {
    Id r = find(p);
    auto [it, fresh] = root_to_comp.emplace(r, next);
    if (fresh) ++next;
    comp[p] = it->second;
  }
  return comp;
}

std::vector<std::vector<Id>> connected_components(const Groupoid& g) {
  auto comp = component_index(g);
  Id k = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<Id>> blocks(static_cast<std::size_t>(k));
  for (Id p = 0; p < g.num_objects(); ++p) blocks[comp[p]].push_back(p);
  return blocks;
}

bool is_group(const Groupoid& g) { return g.num_objects() == 1; }

Groupoid discrete_groupoid(Id n) {
  std::vector<Id> s(n), inv(n), id(n), comp(static_cast<std::size_t>(n) * n, kNone);
  std::iota(s.begin(), s.end(), 0);
  inv = s;
  id = s;
  for (Id i = 0; i < n; ++i) comp[static_cast<std::size_t>(i) * n + i] = i;
  return Groupoid(n, s, s, id, inv, comp);
}

Groupoid coarse_groupoid(Id n) {
  const Id a = n * n;
  std::vector<Id> s(a), t(a), id(n), inv(a), comp(static_cast<std::size_t>(a) * a, kNone);
  for (Id i = 0; i < n; ++i) {
    id[i] = i * n + i;
    for (Id j = 0; j < n; ++j) {
      s[i * n + j] = i;
      t[i * n + j] = j;
      inv[i * n + j] = j * n + i;
      for (Id k = 0; k < n; ++k) comp[static_cast<std::size_t>(i * n + j) * a + (j * n + k)] = i * n + k;
    }
  }
  return Groupoid(n, s, t, id, inv, comp);
}

Groupoid transformation_groupoid(const Groupoid& group, Id set_size, const std::vector<Id>& act) {
  if (!is_group(group)) throw std::invalid_argument("transformation groupoid: not a group");
  const Id k = group.num_arrows();
  if (act.size() != static_cast<std::size_t>(set_size) * k)
    throw std::invalid_argument("transformation groupoid: action table has wrong size");
  const Id e = group.identity(0);
  for (Id x = 0; x < set_size; ++x) {
    if (act[x * k + e] != x)
      throw std::invalid_argument("transformation groupoid: unit does not act trivially at " + std::to_string(x));
    for (Id a = 0; a < k; ++a) {
      Id xa = act[x * k + a];
      if (!in_range(xa, set_size)) throw std::invalid_argument("transformation groupoid: action leaves the set");
      for (Id b = 0; b < k; ++b)
        if (act[xa * k + b] != act[x * k + group.compose(a, b)])
          throw std::invalid_argument("transformation groupoid: not an action at (" + std::to_string(x) + "," +
                                      std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  const Id n = set_size * k;
  std::vector<Id> s(n), t(n);
  for (Id x = 0; x < set_size; ++x)
    for (Id a = 0; a < k; ++a) {
      s[x * k + a] = x;
      t[x * k + a] = act[x * k + a];
    }
  return Groupoid::from_composition(set_size, s, t, [&](Id f, Id g) {
    return s[f] * k + group.compose(f % k, g % k);
  });
}

std::pair<Groupoid, std::vector<std::pair<Id, Id>>> restricted_product(const Groupoid& a, const Groupoid& b) {
  if (a.num_objects() != b.num_objects()) throw std::invalid_argument("restricted product: different bases");
  std::vector<std::pair<Id, Id>> arrows;
  std::vector<Id> index(static_cast<std::size_t>(a.num_arrows()) * b.num_arrows(), kNone);
  for (Id f = 0; f < a.num_arrows(); ++f)
    for (Id g = 0; g < b.num_arrows(); ++g)
      if (a.source(f) == b.source(g) && a.target(f) == b.target(g)) {
        index[static_cast<std::size_t>(f) * b.num_arrows() + g] = static_cast<Id>(arrows.size());
        arrows.emplace_back(f, g);
      }
  std::vector<Id> s, t;
  for (auto [f, g] : arrows) {
    s.push_back(a.source(f));
    t.push_back(a.target(f));
  }
  auto gp = Groupoid::from_composition(a.num_objects(), s, t, [&](Id x, Id y) {
    Id f = a.compose(arrows[x].first, arrows[y].first);
    Id g = b.compose(arrows[x].second, arrows[y].second);
    return index[static_cast<std::size_t>(f) * b.num_arrows() + g];
  });
  return {std::move(gp), std::move(arrows)};
}

std::pair<Groupoid, std::vector<std::pair<Id, Id>>> direct_product(const Groupoid& a, const Groupoid& b) {
  std::vector<std::pair<Id, Id>> arrows;
  std::vector<Id> s, t;
  const Id nb = b.num_objects();
  for (Id f = 0; f < a.num_arrows(); ++f)
    for (Id g = 0; g < b.num_arrows(); ++g) {
      arrows.emplace_back(f, g);
      s.push_back(a.source(f) * nb + b.source(g));
      t.push_back(a.target(f) * nb + b.target(g));
    }
  auto gp = Groupoid::from_composition(a.num_objects() * nb, s, t, [&](Id x, Id y) {
    return a.compose(arrows[x].first, arrows[y].first) * b.num_arrows() +
           b.compose(arrows[x].second, arrows[y].second);
  });
  return {std::move(gp), std::move(arrows)};
}

Groupoid opposite(const Groupoid& g) {
  const Id n = g.num_arrows();
  std::vector<Id> comp(static_cast<std::size_t>(n) * n, kNone);
  for (Id f = 0; f < n; ++f)
    for (Id h = 0; h < n; ++h) comp[static_cast<std::size_t>(f) * n + h] = g.compose(h, f);
  return Groupoid(g.num_objects(), g.targets(), g.sources(), g.identities(), g.inverses(), comp);
}

std::pair<Groupoid, std::vector<Id>> wide_subgroupoid(const Groupoid& g, const std::vector<bool>& keep) {
  std::vector<Id> old_of_new, new_of_old(static_cast<std::size_t>(g.num_arrows()), kNone);
  for (Id f = 0; f < g.num_arrows(); ++f)
    if (keep[f]) {
      new_of_old[f] = static_cast<Id>(old_of_new.size());
      old_of_new.push_back(f);
    }
  for (Id p = 0; p < g.num_objects(); ++p)
    if (!keep[g.identity(p)]) throw std::invalid_argument("subgroupoid: missing identity at " + std::to_string(p));
  for (Id f : old_of_new) {
    if (!keep[g.inverse(f)]) throw std::invalid_argument("subgroupoid: not closed under inverse at " + std::to_string(f));
    for (Id h : old_of_new)
      if (g.target(f) == g.source(h) && !keep[g.compose(f, h)])
        throw std::invalid_argument("subgroupoid: not closed under composition at (" + std::to_string(f) + "," +
                                    std::to_string(h) + ")");
  }
  const Id n = static_cast<Id>(old_of_new.size());
  std::vector<Id> s(n), t(n), id(g.num_objects()), inv(n), comp(static_cast<std::size_t>(n) * n, kNone);
  for (Id i = 0; i < n; ++i) {
    s[i] = g.source(old_of_new[i]);
    t[i] = g.target(old_of_new[i]);
    inv[i] = new_of_old[g.inverse(old_of_new[i])];
    for (Id j = 0; j < n; ++j) {
      Id c = g.compose(old_of_new[i], old_of_new[j]);
      if (c != kNone) comp[static_cast<std::size_t>(i) * n + j] = new_of_old[c];
    }
  }
  for (Id p = 0; p < g.num_objects(); ++p) id[p] = new_of_old[g.identity(p)];
  return {Groupoid(g.num_objects(), s, t, id, inv, comp), std::move(old_of_new)};
}

Groupoid group_from_table(const std::vector<Id>& table, Id n) {
  if (table.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("group table has wrong size");
  std::vector<Id> zeros(static_cast<std::size_t>(n), 0);
  return Groupoid::from_composition(1, zeros, zeros, table);
}

Groupoid group_from_permutations(const std::vector<std::vector<Id>>& generators,
                                 std::vector<std::vector<Id>>* elements) {
  if (generators.empty()) throw std::invalid_argument("group_from_permutations: no generators");
  const std::size_t k = generators.front().size();
  std::vector<Id> ident(k);
  std::iota(ident.begin(), ident.end(), 0);
  for (const auto& p : generators) {
    auto q = p;
    std::sort(q.begin(), q.end());
    if (q != ident) throw std::invalid_argument("group_from_permutations: not a permutation");
  }
  auto then = [&](const std::vector<Id>& a, const std::vector<Id>& b) {
    std::vector<Id> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = b[a[i]];
    return c;
  };
  std::map<std::vector<Id>, Id> seen{{ident, 0}};
  std::vector<std::vector<Id>> frontier{ident};
  while (!frontier.empty()) {
    std::vector<std::vector<Id>> next;
    for (const auto& a : frontier)
      for (const auto& gen : generators) {
        auto c = then(a, gen);
        if (seen.emplace(c, 0).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<Id>> elems;
  for (auto& [perm, idx] : seen) {
    idx = static_cast<Id>(elems.size());
    elems.push_back(perm);
  }
  const Id n = static_cast<Id>(elems.size());
  std::vector<Id> table(static_cast<std::size_t>(n) * n);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = seen.at(then(elems[a], elems[b]));
  if (elements) *elements = elems;
  return group_from_table(table, n);
}

Groupoid cyclic_group(Id n) {
  std::vector<Id> table(static_cast<std::size_t>(n) * n);
  for (Id a = 0; a < n; ++a)
    for (Id b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return group_from_table(table, n);
}

Groupoid symmetric_group(Id k, std::vector<std::vector<Id>>* elements) {
  if (k <= 1) return group_from_permutations({std::vector<Id>(static_cast<std::size_t>(std::max<Id>(k, 0)))}, elements);
  std::vector<Id> swap01(k), cycle(k);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (Id i = 0; i < k; ++i) cycle[i] = (i + 1) % k;
  return group_from_permutations({swap01, cycle}, elements);
}

}  // namespace dgq
