#include "dgq/representations.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dgq/core_groupoids.hpp"
#include "dgq/wha_extras.hpp"

namespace dgq {

Id Bundle::total() const { return std::accumulate(dims.begin(), dims.end(), Id(0)); }

std::vector<Id> Bundle::offsets() const {
  std::vector<Id> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

ValidationReport check_bundle(const DoubleGroupoid& t, const Bundle& v) {
  ValidationReport rep;
  if (static_cast<Id>(v.dims.size()) != t.num_h() || static_cast<Id>(v.action.size()) != t.num_boxes()) {
    rep.broken("shape", {}, "table sizes");
    return rep;
  }
  for (Id a = 0; a < t.num_boxes(); ++a)
    if (v.action[a].rows() != v.dims[t.top(a)] || v.action[a].cols() != v.dims[t.bottom(a)]) rep.broken("shape", {a});
  if (!rep.ok()) return rep;
  for (Id x = 0; x < t.num_h(); ++x)
    if (!(v.action[t.vid(x)] == RatMatrix::identity(v.dims[x]))) rep.fail("identity", {x});
  for (Id a = 0; a < t.num_boxes(); ++a) {
    if (!(v.action[a] * v.action[t.vinv(a)] == RatMatrix::identity(v.dims[t.top(a)]))) rep.fail("invertible", {a});
    for (Id b : t.with_top(t.bottom(a)))
      if (!(v.action[a] * v.action[b] == v.action[t.vcompose(a, b)])) rep.fail("composition", {a, b});
  }
  rep.sort();
  return rep;
}

Bundle bundle_from_basis(const DoubleGroupoid& t, Id n, const BasisAction& act) {
  std::vector<Id> degree(n, kNone), pos(n, 0);
  Bundle v;
  v.dims.assign(t.num_h(), 0);
  for (Id i = 0; i < n; ++i) {
    for (Id x = 0; x < t.num_h() && degree[i] == kNone; ++x)
      if (act(t.vid(x), i) == Element(i)) degree[i] = x;
    if (degree[i] == kNone) throw std::invalid_argument("bundle_from_basis: basis vector is not homogeneous");
    pos[i] = v.dims[degree[i]]++;
  }
  std::vector<std::vector<Id>> members(t.num_h());
  for (Id i = 0; i < n; ++i) members[degree[i]].push_back(i);
  for (Id a = 0; a < t.num_boxes(); ++a) {
    RatMatrix m(v.dims[t.top(a)], v.dims[t.bottom(a)]);
    for (Id i : members[t.bottom(a)])
      for (const auto& [j, c] : act(a, i)) {
        if (degree[j] != t.top(a)) throw std::invalid_argument("bundle_from_basis: action leaves the component");
        m.at(pos[j], pos[i]) = c;
      }
    v.action.push_back(std::move(m));
  }
  return v;
}

Bundle regular_bundle(const WeakHopf& w) {
  return bundle_from_basis(w.dgpd(), w.dim(), [&](Id a, Id i) { return w.product(a, i); });
}

Bundle unit_bundle(const WeakHopf& w) {
  const DoubleGroupoid& t = w.dgpd();
  const std::vector<Id> es = build_core(t, CoreSide::E).carrier;
  std::vector<Element> ones;
  for (Id e : es) ones.push_back(one_e(t, e));
  return bundle_from_basis(t, static_cast<Id>(es.size()), [&](Id a, Id i) {
    const Element y = w.target_map(w.mult(Element(a), ones[i]));
    // The elements 1_E have disjoint supports and 1_E has coefficient 1 at E.
    Element coords, back;
    for (std::size_t j = 0; j < es.size(); ++j) {
      const Rational c = y.coeff(es[j]);
      coords.add(static_cast<Id>(j), c);
      back.add(ones[j], c);
    }
    if (back != y) throw std::logic_error("unit_bundle: image outside the target subalgebra");
    return coords;
  });
}

Bundle trivial_class_bundle(const DoubleGroupoid& t, const std::vector<Id>& members) {
  std::map<Id, Id> index;
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<Id>(i);
  return bundle_from_basis(t, static_cast<Id>(members.size()), [&](Id a, Id i) {
    if (t.bottom(a) != members[i]) return Element();
    auto it = index.find(t.top(a));
    if (it == index.end()) throw std::invalid_argument("trivial_class_bundle: members are not a vertical class");
    return Element(it->second);
  });
}

Bundle dual_bundle(const DoubleGroupoid& t, const Bundle& v) {
  Bundle d;
  const Groupoid& h = t.horizontal();
  for (Id x = 0; x < t.num_h(); ++x) d.dims.push_back(v.dims[h.inverse(x)]);
  for (Id a = 0; a < t.num_boxes(); ++a) d.action.push_back(v.action[t.inv(a)].transpose());
  return d;
}

namespace {

// Columns out = (V(x) (x) U(y)) in, on the ambient space of V (x) U.
void apply_pair(const Bundle& v, const Bundle& u, const std::vector<Id>& ov, const std::vector<Id>& ou,
                const DoubleGroupoid& t, Id x, Id y, const Rational& c, const RatMatrix& in, RatMatrix& out) {
  const Id n2 = u.total();
  const RatMatrix& mx = v.action[x];
  const RatMatrix& my = u.action[y];
  const Id rx = ov[t.top(x)], cx = ov[t.bottom(x)], ry = ou[t.top(y)], cy = ou[t.bottom(y)];
  for (Id col = 0; col < in.cols(); ++col)
    for (Id i1 = 0; i1 < mx.cols(); ++i1)
      for (Id i2 = 0; i2 < my.cols(); ++i2) {
        const Rational& val = in.at((cx + i1) * n2 + cy + i2, col);
        if (val.is_zero()) continue;
        for (Id r1 = 0; r1 < mx.rows(); ++r1) {
          if (mx.at(r1, i1).is_zero()) continue;
          const Rational s = c * val * mx.at(r1, i1);
          for (Id r2 = 0; r2 < my.rows(); ++r2)
            if (!my.at(r2, i2).is_zero()) out.at((rx + r1) * n2 + ry + r2, col) += s * my.at(r2, i2);
        }
      }
}

struct Coordinates {
  RatMatrix basis;          // n x k
  std::vector<Id> pivots;   // k independent rows
  RatMatrix solve;          // inverse of the pivot rows
};

Coordinates coordinates_for(RatMatrix basis) {
  Coordinates c;
  RatMatrix tr = basis.transpose();
  c.pivots = row_reduce(tr);
  const Id k = basis.cols();
  RatMatrix sub(k, k);
  for (Id i = 0; i < k; ++i)
    for (Id j = 0; j < k; ++j) sub.at(i, j) = basis.at(c.pivots[i], j);
  c.solve = inverse(sub).value();
  c.basis = std::move(basis);
  return c;
}

}  // namespace

Bundle tensor_bundles(const WeakHopf& w, const Bundle& v, const Bundle& u) {
  const DoubleGroupoid& t = w.dgpd();
  const Id n = v.total() * u.total();
  const auto ov = v.offsets(), ou = u.offsets();
  std::vector<Coordinates> comp;
  Bundle out;
  for (Id x = 0; x < t.num_h(); ++x) {
    RatMatrix p(n, n);
    const RatMatrix id = RatMatrix::identity(n);
    for (const auto& [xy, c] : w.coproduct(t.vid(x))) apply_pair(v, u, ov, ou, t, xy[0], xy[1], c, id, p);
    comp.push_back(coordinates_for(column_basis(p)));
    out.dims.push_back(comp.back().basis.cols());
  }
  for (Id a = 0; a < t.num_boxes(); ++a) {
    const Coordinates& from = comp[t.bottom(a)];
    const Coordinates& to = comp[t.top(a)];
    RatMatrix img(n, from.basis.cols());
    for (const auto& [xy, c] : w.coproduct(a)) apply_pair(v, u, ov, ou, t, xy[0], xy[1], c, from.basis, img);
    RatMatrix rows(static_cast<Id>(to.pivots.size()), img.cols());
    for (Id i = 0; i < rows.rows(); ++i)
      for (Id j = 0; j < img.cols(); ++j) rows.at(i, j) = img.at(to.pivots[i], j);
    RatMatrix m = to.solve * rows;
    if (!(to.basis * m == img)) throw std::logic_error("tensor_bundles: action leaves the component");
    out.action.push_back(std::move(m));
  }
  return out;
}

RatMatrix act(const Bundle& v, const DoubleGroupoid& t, const Element& e) {
  const auto off = v.offsets();
  RatMatrix m(v.total(), v.total());
  for (const auto& [a, c] : e) {
    const RatMatrix& blk = v.action[a];
    for (Id i = 0; i < blk.rows(); ++i)
      for (Id j = 0; j < blk.cols(); ++j) m.at(off[t.top(a)] + i, off[t.bottom(a)] + j) += c * blk.at(i, j);
  }
  return m;
}

Rational trace(const Bundle& v, const DoubleGroupoid& t, const Element& e) {
  Rational s(0);
  for (const auto& [a, c] : e) {
    if (t.top(a) != t.bottom(a)) continue;
    for (Id i = 0; i < v.action[a].rows(); ++i) s += c * v.action[a].at(i, i);
  }
  return s;
}

Id commutant_dimension(const DoubleGroupoid& t, const Bundle& v) {
  std::vector<Id> base(t.num_h() + 1, 0);
  for (Id x = 0; x < t.num_h(); ++x) base[x + 1] = base[x] + v.dims[x] * v.dims[x];
  const Id unknowns = base[t.num_h()];
  if (unknowns == 0) return 0;
  // F_x is the block at x; equations action[A] F_b(A) - F_t(A) action[A] = 0, reduced in batches.
  std::vector<std::vector<Rational>> rows;
  RatMatrix acc(0, unknowns);
  auto flush = [&] {
    RatMatrix m(acc.rows() + static_cast<Id>(rows.size()), unknowns);
    for (Id i = 0; i < acc.rows(); ++i)
      for (Id j = 0; j < unknowns; ++j) m.at(i, j) = acc.at(i, j);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (Id j = 0; j < unknowns; ++j) m.at(acc.rows() + static_cast<Id>(r), j) = rows[r][j];
    rows.clear();
    const Id rk = static_cast<Id>(row_reduce(m).size());
    acc = RatMatrix(rk, unknowns);
    for (Id i = 0; i < rk; ++i)
      for (Id j = 0; j < unknowns; ++j) acc.at(i, j) = m.at(i, j);
  };
  for (Id a = 0; a < t.num_boxes(); ++a) {
    if (t.is_vertical_identity(a)) continue;
    const RatMatrix& m = v.action[a];
    const Id tx = t.top(a), bx = t.bottom(a);
    const Id dt = v.dims[tx], db = v.dims[bx];
    for (Id i = 0; i < dt; ++i)
      for (Id j = 0; j < db; ++j) {
        std::vector<Rational> row(unknowns, Rational(0));
        for (Id k = 0; k < db; ++k) row[base[bx] + k * db + j] += m.at(i, k);
        for (Id k = 0; k < dt; ++k) row[base[tx] + i * dt + k] -= m.at(k, j);
        if (std::any_of(row.begin(), row.end(), [](const Rational& r) { return !r.is_zero(); }))
          rows.push_back(std::move(row));
      }
    if (static_cast<Id>(rows.size()) > 2 * unknowns) flush();
  }
  flush();
  return unknowns - acc.rows();
}

bool is_submodule(const Bundle& v, const DoubleGroupoid& t, const RatMatrix& basis) {
  const Id r = rank(basis);
  for (Id a = 0; a < t.num_boxes(); ++a) {
    const RatMatrix img = act(v, t, Element(a)) * basis;
    RatMatrix both(basis.rows(), basis.cols() + img.cols());
    for (Id i = 0; i < basis.rows(); ++i) {
      for (Id j = 0; j < basis.cols(); ++j) both.at(i, j) = basis.at(i, j);
      for (Id j = 0; j < img.cols(); ++j) both.at(i, basis.cols() + j) = img.at(i, j);
    }
    if (rank(std::move(both)) != r) return false;
  }
  return true;
}

std::vector<ClassData> vertical_classes(const DoubleGroupoid& t) {
  const Id nh = t.num_h();
  std::vector<Id> parent(nh);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Id x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Id a = 0; a < t.num_boxes(); ++a) {
    Id p = find(t.top(a)), q = find(t.bottom(a));
    if (p != q) parent[std::max(p, q)] = std::min(p, q);
  }
  std::map<Id, std::vector<Id>> groups;
  for (Id x = 0; x < nh; ++x) groups[find(x)].push_back(x);
  std::vector<ClassData> out;
  std::size_t checksum = 0;
  for (auto& [root, members] : groups) {
    ClassData c;
    c.members = members;
    c.base = members.front();
    for (Id a : t.with_top(c.base))
      if (t.bottom(a) == c.base) c.loops.push_back(a);
    std::sort(c.loops.begin(), c.loops.end());
    std::map<Id, Id> idx;
    for (std::size_t i = 0; i < c.loops.size(); ++i) idx[c.loops[i]] = static_cast<Id>(i);
    const Id k = static_cast<Id>(c.loops.size());
    c.loop_group = Groupoid::from_composition(1, std::vector<Id>(k, 0), std::vector<Id>(k, 0),
                                              [&](Id i, Id j) { return idx.at(t.vcompose(c.loops[i], c.loops[j])); });
    checksum += members.size() * members.size() * c.loops.size();
    out.push_back(std::move(c));
  }
  if (checksum != static_cast<std::size_t>(t.num_boxes()))
    throw std::logic_error("vertical_classes: decomposition count " + std::to_string(checksum) + " != |B|");
  return out;
}

FusionVerdict is_fusion(const WeakHopf& w) {
  if (!effective_theta(w)) throw std::invalid_argument("is_fusion: needs theta weights");
  const DoubleGroupoid& t = w.dgpd();
  FusionVerdict f;
  f.vertical_connected = connected_components(t.vertical()).size() <= 1;
  const std::vector<Id> es = build_core(t, CoreSide::E).carrier;
  std::map<Id, std::vector<Id>> by_bottom;
  for (Id e : es) by_bottom[t.bottom(e)].push_back(e);
  f.unique_bottoms = true;
  for (const auto& [x, list] : by_bottom)
    if (list.size() > 1 && f.unique_bottoms) {
      f.unique_bottoms = false;
      f.witness = {x, list[0], list[1]};
    }
  const auto classes = vertical_classes(t);
  std::vector<Id> class_of(t.num_h());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Id x : classes[c].members) class_of[x] = static_cast<Id>(c);
  std::map<Id, Id> fiber;
  std::set<Id> degree_classes;
  for (Id e : es) {
    const Id deg = t.horizontal().inverse(t.bottom(e));
    ++fiber[deg];
    degree_classes.insert(class_of[deg]);
  }
  f.transitive = degree_classes.size() <= 1;
  f.single_fibers = std::all_of(fiber.begin(), fiber.end(), [](const auto& kv) { return kv.second == 1; });
  f.unit_commutant = commutant_dimension(t, unit_bundle(w));
  return f;
}

std::optional<RatMatrix> unit_reducibility_witness(const WeakHopf& w, const Bundle& unit) {
  const DoubleGroupoid& t = w.dgpd();
  const std::vector<Id> es = build_core(t, CoreSide::E).carrier;
  // bundle_from_basis keeps the order of basis vectors inside each component.
  std::map<Id, Id> count;
  for (Id e : es) ++count[t.horizontal().inverse(t.bottom(e))];
  if (std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 1; })) return std::nullopt;
  const auto off = unit.offsets();
  RatMatrix basis(unit.total(), static_cast<Id>(count.size()));
  Id col = 0;
  for (const auto& [deg, k] : count) {
    for (Id i = 0; i < k; ++i) basis.at(off[deg] + i, col) = Rational(1);
    ++col;
  }
  return basis;
}

DimensionTable dimensions(const WeakHopf& w, std::uint64_t seed) {
  const FusionVerdict f = is_fusion(w);
  if (!f.vertical_connected) throw std::domain_error("not fusion: clause (a), the vertical groupoid is not connected");
  if (!f.unique_bottoms)
    throw std::domain_error("not fusion: clause (b), boxes " + std::to_string(f.witness[1]) + " and " +
                            std::to_string(f.witness[2]) + " of E share the bottom " + std::to_string(f.witness[0]));
  const DoubleGroupoid& t = w.dgpd();
  const ThetaWeights th = *effective_theta(w);
  DimensionTable d;
  d.classes = vertical_classes(t);
  d.num_e = static_cast<Id>(build_core(t, CoreSide::E).carrier.size());
  d.positive_class_sums = true;
  d.global_dim = Rational(0);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    Rational s(0);
    for (Id y : d.classes[c].members) s += th.at(t.l(y)) / th.at(t.r(y));
    d.class_sums.push_back(s);
    if (s.sign() <= 0) d.positive_class_sums = false;
    d.global_dim += s * s * Rational(static_cast<long>(d.classes[c].loops.size())) / Rational(d.num_e * d.num_e);
  }
  d.pseudo_unitary = true;
  for (Id a = 0; a < t.num_boxes(); ++a) {
    const Rational sq = th.at(t.bl(a)) * th.at(t.tr(a)) / (th.at(t.br(a)) * th.at(t.tl(a)));
    if (sq.sign() <= 0) d.pseudo_unitary = false;
  }
  d.integral = true;
  Rational fp_total(0);
  bool all_fp = true;
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    for (Id dim : irreducible_dims(d.classes[c].loop_group, seed)) {
      SimpleDescriptor s;
      s.class_index = static_cast<Id>(c);
      s.irrep_dim = dim;
      s.total_dim = static_cast<Id>(d.classes[c].members.size()) * dim;
      s.qdim = Rational(dim) * d.class_sums[c] / Rational(d.num_e);
      if (d.positive_class_sums) s.fpdim = s.qdim;
      else if (d.pseudo_unitary) s.fpdim = s.qdim.abs();
      if (s.fpdim) {
        fp_total += *s.fpdim * *s.fpdim;
        if (!s.fpdim->is_integer() || s.fpdim->sign() <= 0) d.integral = false;
      } else {
        all_fp = false;
        d.integral = false;
      }
      d.simples.push_back(s);
    }
  }
  if (all_fp) d.fp_global = fp_total;
  return d;
}

std::string dimensions_csv(const DimensionTable& table) {
  std::ostringstream os;
  os << "class,size,loop_order,irrep_dim,qdim,fpdim\n";
  for (const auto& s : table.simples) {
    const auto& c = table.classes[s.class_index];
    os << s.class_index << ',' << c.members.size() << ',' << c.loops.size() << ',' << s.irrep_dim << ','
       << s.qdim << ',' << (s.fpdim ? s.fpdim->str() : std::string("")) << '\n';
  }
  return os.str();
}

Rational bundle_fpdim(const DimensionTable& table, const Bundle& v) {
  if (!table.positive_class_sums) throw std::domain_error("bundle_fpdim: needs positive class sums");
  Rational s(0);
  for (std::size_t c = 0; c < table.classes.size(); ++c)
    s += table.class_sums[c] * Rational(v.dims[table.classes[c].base]) / Rational(table.num_e);
  return s;
}

Rational bundle_qdim(const WeakHopf& w, const Bundle& v) {
  const Id ne = static_cast<Id>(build_core(w.dgpd(), CoreSide::E).carrier.size());
  return trace(v, w.dgpd(), pivotal_element(w)) / Rational(ne);
}

}  // namespace dgq
