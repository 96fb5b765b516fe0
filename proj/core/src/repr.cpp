#include "hopfkit/repr.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

std::size_t side_slot(Side side) { return side == Side::Plus ? 0 : 1; }

bool all_zero(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Scalar> v(n, Scalar(0));
  v[k] = Scalar(1);
  return v;
}

std::vector<Scalar> column(const Matrix<Scalar>& m, std::size_t c) {
  std::vector<Scalar> v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

void add_scaled(std::vector<Scalar>& acc, const std::vector<Scalar>& v, const Scalar& s) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) acc[k] += s * v[k];
  }
}

/// Nonzero rows of the reduced row echelon form of the given vectors.
std::vector<std::vector<Scalar>> span_basis(const std::vector<std::vector<Scalar>>& vectors, std::size_t n) {
  Matrix<Scalar> m(0, n);
  for (const auto& v : vectors) m.append_row(v);
  auto pivots = rref(m);
  std::vector<std::vector<Scalar>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
  return out;
}

GroupElement group_power(const std::vector<GroupElement>& gens, const DegreeVector& alpha, std::size_t rank) {
  GroupElement g = GroupElement::identity(rank);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (alpha[i] != 0) g = g * gens[i].pow(alpha[i]);
  }
  return g;
}

std::string weight_label(const AlgebraHandle& handle, const Weight& w) { return w.to_string(handle.datum().params); }

// ------------------------------------------------------ highest weight layers

/// U⁻_α / J_α with J_α kept in reduced row echelon form.
struct Layer {
  DegreeVector alpha;
  std::size_t ambient = 0;
  Matrix<Scalar> relations;  ///< rows span J_α
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;

  std::vector<Scalar> project(std::vector<Scalar> u) const {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      const Scalar c = u[pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < ambient; ++k) {
        if (!relations(r, k).is_zero()) u[k] -= c * relations(r, k);
      }
    }
    std::vector<Scalar> out(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) out[k] = u[free[k]];
    return out;
  }
};

class LayerBuilder {
 public:
  LayerBuilder(const AlgebraHandle& handle, std::optional<std::vector<int>> m)
      : handle_(handle), m_(std::move(m)), theta_(handle.theta()) {}

  /// Builds all nonzero layers up to `depth` (or until a height is empty).
  std::vector<Layer> build(std::optional<int> depth) {
    std::vector<Layer> out;
    std::set<DegreeVector> frontier{DegreeVector::zero(theta_)};
    for (int height = 0;; ++height) {
      if (depth && height > *depth) break;
      std::set<DegreeVector> next;
      for (const auto& alpha : frontier) {
        Layer layer = make_layer(alpha);
        if (layer.free.empty()) continue;
        for (std::size_t j = 0; j < theta_; ++j) next.insert(alpha + DegreeVector::unit(theta_, j));
        out.push_back(std::move(layer));
      }
      bool any = false;
      for (const auto& l : out) any = any || l.alpha.height() == height;
      if (!any) break;
      frontier = std::move(next);
    }
    return out;
  }

  /// Index into built_ of a nonzero layer.
  std::optional<std::size_t> layer_index(const DegreeVector& alpha) const {
    auto it = built_index_.find(alpha);
    if (it == built_index_.end() || built_[it->second].free.empty()) return std::nullopt;
    return it->second;
  }

 private:
  Layer make_layer(const DegreeVector& alpha) {
    Layer layer;
    layer.alpha = alpha;
    layer.ambient = handle_.dim(Side::Minus, alpha);
    Matrix<Scalar> rows(0, layer.ambient);
    if (m_) {
      for (std::size_t j = 0; j < theta_; ++j) {
        DegreeVector beta = alpha;
        beta[j] -= 1;
        if (!beta.is_nonnegative()) continue;
        const Matrix<Scalar>& left = handle_.left_multiplication_matrix(Side::Minus, j, beta);
        if (auto k = layer_index(beta)) {
          const Layer& src = built_[*k];
          for (std::size_t r = 0; r < src.pivots.size(); ++r) rows.append_row(left.apply(src.relations.row(r)));
        } else {
          for (std::size_t c = 0; c < left.cols(); ++c) rows.append_row(column(left, c));
        }
      }
      for (std::size_t i = 0; i < theta_; ++i) {
        if (alpha == DegreeVector::unit(theta_, i) * ((*m_)[i] + 1)) {
          FreeElement power{{Word(static_cast<std::size_t>((*m_)[i] + 1), static_cast<std::uint8_t>(i)), Scalar(1)}};
          rows.append_row(handle_.coordinates(Side::Minus, alpha, power));
        }
      }
    }
    layer.pivots = rref(rows);
    Matrix<Scalar> reduced(0, layer.ambient);
    for (std::size_t r = 0; r < layer.pivots.size(); ++r) reduced.append_row(rows.row(r));
    layer.relations = std::move(reduced);
    std::vector<bool> is_pivot(layer.ambient, false);
    for (auto c : layer.pivots) is_pivot[c] = true;
    for (std::size_t c = 0; c < layer.ambient; ++c) {
      if (!is_pivot[c]) layer.free.push_back(c);
    }
    built_.push_back(layer);
    built_index_[alpha] = built_.size() - 1;
    return layer;
  }

  const AlgebraHandle& handle_;
  std::optional<std::vector<int>> m_;
  std::size_t theta_;
  std::vector<Layer> built_;
  std::map<DegreeVector, std::size_t> built_index_;
};

/// E_i on x·m_χ for x ∈ U⁻_α, in canonical coordinates of U⁻_{α−α_i}.
Matrix<Scalar> raising_matrix(const AlgebraHandle& handle, const Weight& chi, std::size_t i, const DegreeVector& alpha) {
  const ReducedDatum& d = handle.datum();
  DegreeVector beta = alpha;
  beta[i] -= 1;
  const Matrix<Scalar>& s = handle.derivation_matrix(Derivation::S, i, alpha);
  const Matrix<Scalar>& sp = handle.derivation_matrix(Derivation::SPrime, i, alpha);
  const Scalar k_factor = (chi(d.K[i]) / handle.chi_degree(beta, d.K[i])).to_scalar() * d.ell[i];
  const Scalar l_factor = chi(d.L[i]).inverse().to_scalar() * d.ell[i];
  return s.scaled(k_factor) - sp.scaled(l_factor);
}

HighestWeightModule assemble(const AlgebraHandle& handle, const Weight& chi, std::optional<std::vector<int>> m,
                             std::optional<int> depth, ModuleKind kind) {
  LayerBuilder builder(handle, m);
  std::vector<Layer> layers = builder.build(depth);
  HighestWeightModule out{WeightModule(handle), chi, 0, kind, 0, {}};
  std::map<DegreeVector, std::size_t> weight_of;
  for (const auto& layer : layers) {
    weight_of[layer.alpha] = out.module.add_weight(shifted_weight(handle, chi, layer.alpha), layer.free.size());
    out.degrees.push_back(layer.alpha);
    out.depth = std::max(out.depth, layer.alpha.height());
  }
  const std::size_t theta = handle.theta();
  for (std::size_t k = 0; k < layers.size(); ++k) {
    const Layer& src = layers[k];
    for (std::size_t j = 0; j < theta; ++j) {
      auto t = weight_of.find(src.alpha + DegreeVector::unit(theta, j));
      if (t == weight_of.end()) continue;
      const Layer& dst = layers[t->second];
      const Matrix<Scalar>& left = handle.left_multiplication_matrix(Side::Minus, j, src.alpha);
      Matrix<Scalar> block(dst.free.size(), src.free.size());
      for (std::size_t c = 0; c < src.free.size(); ++c) {
        auto image = dst.project(column(left, src.free[c]));
        for (std::size_t r = 0; r < image.size(); ++r) block(r, c) = image[r];
      }
      out.module.set_block(Side::Minus, j, k, t->second, std::move(block));
    }
    for (std::size_t i = 0; i < theta; ++i) {
      if (src.alpha[i] == 0) continue;
      DegreeVector beta = src.alpha;
      beta[i] -= 1;
      auto t = weight_of.find(beta);
      Matrix<Scalar> raise = raising_matrix(handle, chi, i, src.alpha);
      if (m) {
        // J_α must map into J_{α−α_i}
        for (std::size_t r = 0; r < src.pivots.size(); ++r) {
          if (t == weight_of.end()) break;
          if (!all_zero(layers[t->second].project(raise.apply(src.relations.row(r)))))
            throw AuditFailure("E_" + std::to_string(i + 1) + " does not preserve the defining submodule in degree " +
                               src.alpha.to_string());
        }
      }
      if (t == weight_of.end()) continue;
      const Layer& dst = layers[t->second];
      Matrix<Scalar> block(dst.free.size(), src.free.size());
      for (std::size_t c = 0; c < src.free.size(); ++c) {
        auto image = dst.project(column(raise, src.free[c]));
        for (std::size_t r = 0; r < image.size(); ++r) block(r, c) = image[r];
      }
      out.module.set_block(Side::Plus, i, k, t->second, std::move(block));
    }
  }
  return out;
}

}  // namespace

// --------------------------------------------------------------- WeightModule

WeightModule::WeightModule(const AlgebraHandle& handle) : handle_(&handle) {}

std::size_t WeightModule::add_weight(const Weight& weight, std::size_t dim) {
  if (index_.count(weight)) throw InvalidDatum("weight added twice: " + weight_label(*handle_, weight));
  index_[weight] = weights_.size();
  weights_.push_back(weight);
  dims_.push_back(dim);
  offsets_.push_back(total_);
  total_ += dim;
  return weights_.size() - 1;
}

std::optional<std::size_t> WeightModule::find(const Weight& weight) const {
  auto it = index_.find(weight);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void WeightModule::set_block(Side side, std::size_t i, std::size_t source, std::size_t target, Matrix<Scalar> matrix) {
  if (matrix.rows() != dims_.at(target) || matrix.cols() != dims_.at(source))
    throw RankMismatch("action block has the wrong shape");
  auto& slot = blocks_[side_slot(side)];
  if (matrix.is_zero()) {
    slot.erase({i, source});
    return;
  }
  slot[{i, source}] = Block{target, std::move(matrix)};
}

const WeightModule::Block* WeightModule::block(Side side, std::size_t i, std::size_t source) const {
  const auto& slot = blocks_[side_slot(side)];
  auto it = slot.find({i, source});
  return it == slot.end() ? nullptr : &it->second;
}

std::optional<std::size_t> WeightModule::expected_target(Side side, std::size_t i, std::size_t source) const {
  const Character& chi_i = handle_->datum().chi[i];
  return find(side == Side::Plus ? weights_[source] * chi_i : weights_[source] * chi_i.inverse());
}

std::optional<std::pair<std::size_t, std::vector<Scalar>>> WeightModule::act(Side side, std::size_t i,
                                                                             std::size_t source,
                                                                             const std::vector<Scalar>& v) const {
  const Block* b = block(side, i, source);
  if (!b) return std::nullopt;
  auto out = b->matrix.apply(v);
  if (all_zero(out)) return std::nullopt;
  return std::make_pair(b->target, std::move(out));
}

std::optional<std::pair<std::size_t, std::vector<Scalar>>> WeightModule::act_word(Side side, const Word& w,
                                                                                  std::size_t source,
                                                                                  const std::vector<Scalar>& v) const {
  std::pair<std::size_t, std::vector<Scalar>> cur{source, v};
  for (std::size_t p = w.size(); p-- > 0;) {
    auto next = act(side, w[p], cur.first, cur.second);
    if (!next) return std::nullopt;
    cur = std::move(*next);
  }
  if (all_zero(cur.second)) return std::nullopt;
  return cur;
}

Matrix<Scalar> WeightModule::full_matrix(Side side, std::size_t i) const {
  Matrix<Scalar> out(total_, total_);
  for (const auto& [key, b] : blocks_[side_slot(side)]) {
    if (key.first != i) continue;
    const std::size_t src = key.second;
    for (std::size_t r = 0; r < b.matrix.rows(); ++r)
      for (std::size_t c = 0; c < b.matrix.cols(); ++c) out(offsets_[b.target] + r, offsets_[src] + c) = b.matrix(r, c);
  }
  return out;
}

// ------------------------------------------------------------------ weights

std::optional<std::vector<int>> is_dominant(const AlgebraHandle& handle, const Weight& chi) {
  const ReducedDatum& d = handle.datum();
  std::vector<int> m(d.theta());
  for (std::size_t i = 0; i < d.theta(); ++i) {
    auto k = unit_discrete_log(d.q(i, i), chi(d.K[i] * d.L[i]));
    if (!k || *k < 0) return std::nullopt;
    m[i] = static_cast<int>(*k);
  }
  return m;
}

Weight dominant_character(const AlgebraHandle& handle, const std::vector<int>& m) {
  const ReducedDatum& d = handle.datum();
  if (m.size() != d.theta()) throw RankMismatch("m-vector must have one entry per vertex");
  std::vector<GroupElement> elements;
  std::vector<UnitScalar> targets;
  for (std::size_t i = 0; i < d.theta(); ++i) {
    if (m[i] < 0) throw NotDominant("m-vector entries must be nonnegative");
    elements.push_back(d.K[i] * d.L[i]);
    targets.push_back(d.q(i, i).pow(m[i]));
  }
  auto chi = solve_character(elements, targets, d.group_rank);
  if (!chi) throw NoSolution("no character takes the values q_ii^m_i on K_iL_i");
  return *chi;
}

Weight shifted_weight(const AlgebraHandle& handle, const Weight& chi, const DegreeVector& alpha) {
  return chi * character_power(handle.datum().chi, alpha).inverse();
}

bool weight_leq(const AlgebraHandle& handle, const Weight& lower, const Weight& upper) {
  auto alpha = try_solve_weight_difference(upper, lower, handle.datum().chi);
  return alpha && alpha->is_nonnegative();
}

// ------------------------------------------------------- highest weight modules

HighestWeightModule simple_module(const AlgebraHandle& handle, const Weight& chi, std::optional<int> depth) {
  auto m = is_dominant(handle, chi);
  if (!m) throw NotDominant("character " + weight_label(handle, chi) + " is not dominant");
  if (!handle.cartan().finite_type && !depth)
    throw DegreeCapExceeded("simple modules over data that are not of finite type need an explicit depth");
  HighestWeightModule out = assemble(handle, chi, m, depth, ModuleKind::Simple);
  if (depth && out.depth >= *depth) {
    // a nonzero layer at the requested depth means the module may continue
    bool vanished = true;
    for (std::size_t k = 0; k < out.degrees.size(); ++k) {
      if (out.degrees[k].height() == *depth) vanished = false;
    }
    if (!vanished) out.module.truncated_depth = *depth;
  }
  return out;
}

HighestWeightModule verma_truncated(const AlgebraHandle& handle, const Weight& chi, int depth) {
  if (depth > handle.max_degree())
    throw DegreeCapExceeded("depth " + std::to_string(depth) + " exceeds the degree cap " +
                            std::to_string(handle.max_degree()));
  HighestWeightModule out = assemble(handle, chi, std::nullopt, depth, ModuleKind::Verma);
  out.module.truncated_depth = depth;
  return out;
}

// ------------------------------------------------------------------- tensor

WeightModule tensor(const WeightModule& a, const WeightModule& b) {
  if (!a.same_handle(b)) throw HandleMismatch("tensor factors were built over different algebra handles");
  const AlgebraHandle& handle = a.handle();
  const ReducedDatum& d = handle.datum();
  struct Component {
    std::size_t weight;
    std::size_t offset;
  };
  std::map<Weight, std::vector<std::pair<std::size_t, std::size_t>>> groups;
  std::vector<Weight> order;
  for (std::size_t x = 0; x < a.weight_count(); ++x) {
    for (std::size_t y = 0; y < b.weight_count(); ++y) {
      Weight w = a.weight(x) * b.weight(y);
      auto [it, inserted] = groups.try_emplace(w);
      if (inserted) order.push_back(w);
      it->second.emplace_back(x, y);
    }
  }
  WeightModule out(handle);
  std::map<std::pair<std::size_t, std::size_t>, Component> where;
  for (const auto& w : order) {
    std::size_t dim = 0;
    for (auto [x, y] : groups[w]) dim += a.dim(x) * b.dim(y);
    std::size_t idx = out.add_weight(w, dim);
    std::size_t off = 0;
    for (auto [x, y] : groups[w]) {
      where[{x, y}] = Component{idx, off};
      off += a.dim(x) * b.dim(y);
    }
  }
  for (Side side : {Side::Plus, Side::Minus}) {
    for (std::size_t i = 0; i < d.theta(); ++i) {
      std::map<std::size_t, Matrix<Scalar>> blocks;  // keyed by source weight
      std::map<std::size_t, std::size_t> targets;
      auto entry = [&](std::size_t src, std::size_t dst, std::size_t r, std::size_t c, const Scalar& v) {
        auto it = blocks.find(src);
        if (it == blocks.end()) {
          it = blocks.emplace(src, Matrix<Scalar>(out.dim(dst), out.dim(src))).first;
          targets[src] = dst;
        }
        it->second(r, c) += v;
      };
      for (const auto& [xy, comp] : where) {
        const auto [x, y] = xy;
        const std::size_t db = b.dim(y);
        // generator on the second factor: coefficient χ_x(K_i) for E, 1 for F
        if (const auto* blk = b.block(side, i, y)) {
          const Component& tc = where.at({x, blk->target});
          const std::size_t db2 = b.dim(blk->target);
          const Scalar coef = side == Side::Plus ? a.weight(x)(d.K[i]).to_scalar() : Scalar(1);
          for (std::size_t p = 0; p < a.dim(x); ++p)
            for (std::size_t s = 0; s < db; ++s)
              for (std::size_t r = 0; r < db2; ++r) {
                const Scalar& v = blk->matrix(r, s);
                if (v.is_zero()) continue;
                entry(comp.weight, tc.weight, tc.offset + p * db2 + r, comp.offset + p * db + s, coef * v);
              }
        }
        // generator on the first factor: coefficient 1 for E, ψ_y(L_i)⁻¹ for F
        if (const auto* blk = a.block(side, i, x)) {
          const Component& tc = where.at({blk->target, y});
          const Scalar coef = side == Side::Plus ? Scalar(1) : b.weight(y)(d.L[i]).inverse().to_scalar();
          for (std::size_t p = 0; p < a.dim(x); ++p)
            for (std::size_t r = 0; r < a.dim(blk->target); ++r) {
              const Scalar& v = blk->matrix(r, p);
              if (v.is_zero()) continue;
              for (std::size_t s = 0; s < db; ++s) entry(comp.weight, tc.weight, tc.offset + r * db + s, comp.offset + p * db + s, coef * v);
            }
        }
      }
      for (auto& [src, m] : blocks) out.set_block(side, i, src, targets[src], std::move(m));
    }
  }
  if (a.truncated_depth || b.truncated_depth) out.truncated_depth = std::max(a.truncated_depth.value_or(0), b.truncated_depth.value_or(0));
  return out;
}

// ------------------------------------------------------------------- audits

RelationsAudit audit_relations(const WeightModule& m) {
  RelationsAudit audit;
  const AlgebraHandle& handle = m.handle();
  const ReducedDatum& d = handle.datum();
  const std::size_t theta = d.theta();
  auto fail = [&](std::string msg) {
    audit.ok = false;
    audit.failures.push_back(std::move(msg));
  };
  for (Side side : {Side::Plus, Side::Minus}) {
    for (std::size_t i = 0; i < theta; ++i)
      for (std::size_t w = 0; w < m.weight_count(); ++w) {
        const auto* blk = m.block(side, i, w);
        if (!blk) continue;
        auto expected = m.expected_target(side, i, w);
        if (!expected || *expected != blk->target)
          fail(std::string(side == Side::Plus ? "E_" : "F_") + std::to_string(i + 1) + " on weight " +
               weight_label(handle, m.weight(w)) + " lands in the wrong weight");
      }
  }
  if (!audit.ok) return audit;
  const bool truncated = m.truncated_depth.has_value();
  for (std::size_t w = 0; w < m.weight_count(); ++w) {
    const Weight& phi = m.weight(w);
    for (std::size_t i = 0; i < theta; ++i)
      for (std::size_t j = 0; j < theta; ++j) {
        if (truncated && !m.expected_target(Side::Minus, j, w)) continue;
        for (std::size_t c = 0; c < m.dim(w); ++c) {
          const auto e = unit_vector(m.dim(w), c);
          std::map<std::size_t, std::vector<Scalar>> lhs;
          auto accumulate = [&](std::size_t t, const std::vector<Scalar>& v, const Scalar& s) {
            auto [it, inserted] = lhs.try_emplace(t, std::vector<Scalar>(m.dim(t), Scalar(0)));
            add_scaled(it->second, v, s);
          };
          if (auto f = m.act(Side::Minus, j, w, e)) {
            if (auto ef = m.act(Side::Plus, i, f->first, f->second)) accumulate(ef->first, ef->second, Scalar(1));
          }
          if (auto up = m.act(Side::Plus, i, w, e)) {
            if (auto fe = m.act(Side::Minus, j, up->first, up->second)) accumulate(fe->first, fe->second, Scalar(-1));
          }
          std::map<std::size_t, std::vector<Scalar>> rhs;
          if (i == j) {
            std::vector<Scalar> diag(m.dim(w), Scalar(0));
            diag[c] = d.ell[i] * (phi(d.K[i]).to_scalar() - phi(d.L[i]).inverse().to_scalar());
            if (!all_zero(diag)) rhs[w] = std::move(diag);
          }
          std::erase_if(lhs, [](const auto& kv) { return all_zero(kv.second); });
          if (lhs != rhs) {
            fail("E_" + std::to_string(i + 1) + "F_" + std::to_string(j + 1) + " - F_" + std::to_string(j + 1) + "E_" +
                 std::to_string(i + 1) + " fails on weight " + weight_label(handle, phi));
            break;
          }
        }
      }
  }
  for (Side side : {Side::Plus, Side::Minus}) {
    for (const auto& gen : handle.serre_generators(side)) {
      for (std::size_t w = 0; w < m.weight_count(); ++w) {
        if (truncated && side == Side::Minus) {
          Weight target = shifted_weight(handle, m.weight(w), gen.degree);
          if (!m.find(target)) continue;
        }
        for (std::size_t c = 0; c < m.dim(w); ++c) {
          const auto e = unit_vector(m.dim(w), c);
          std::map<std::size_t, std::vector<Scalar>> total;
          for (const auto& [word, coef] : gen.element) {
            auto r = m.act_word(side, word, w, e);
            if (!r) continue;
            auto [it, inserted] = total.try_emplace(r->first, std::vector<Scalar>(m.dim(r->first), Scalar(0)));
            add_scaled(it->second, r->second, coef);
          }
          bool zero = std::all_of(total.begin(), total.end(), [](const auto& kv) { return all_zero(kv.second); });
          if (!zero) {
            fail(std::string("Serre relation (") + std::to_string(gen.i + 1) + "," + std::to_string(gen.j + 1) + ") on " +
                 (side == Side::Plus ? "E" : "F") + " fails on weight " + weight_label(handle, m.weight(w)));
            break;
          }
        }
      }
    }
  }
  return audit;
}

std::map<std::size_t, std::vector<std::vector<Scalar>>> singular_vectors(const WeightModule& m) {
  std::map<std::size_t, std::vector<std::vector<Scalar>>> out;
  const std::size_t theta = m.handle().theta();
  for (std::size_t w = 0; w < m.weight_count(); ++w) {
    if (m.dim(w) == 0) continue;
    Matrix<Scalar> stacked(0, m.dim(w));
    for (std::size_t i = 0; i < theta; ++i) {
      if (const auto* blk = m.block(Side::Plus, i, w)) {
        for (std::size_t r = 0; r < blk->matrix.rows(); ++r) stacked.append_row(blk->matrix.row(r));
      }
    }
    auto basis = nullspace(std::move(stacked));
    if (!basis.empty()) out[w] = std::move(basis);
  }
  return out;
}

std::map<std::size_t, std::vector<std::vector<Scalar>>> lowering_span(const WeightModule& m, std::size_t weight,
                                                                     const std::vector<Scalar>& v) {
  std::map<std::size_t, std::vector<std::vector<Scalar>>> total;
  std::map<std::size_t, std::vector<std::vector<Scalar>>> frontier{{weight, {v}}};
  const std::size_t theta = m.handle().theta();
  while (!frontier.empty()) {
    std::map<std::size_t, std::vector<std::vector<Scalar>>> next;
    for (auto& [w, vecs] : frontier) {
      auto basis = span_basis(vecs, m.dim(w));
      for (const auto& b : basis) {
        for (std::size_t j = 0; j < theta; ++j) {
          if (auto r = m.act(Side::Minus, j, w, b)) next[r->first].push_back(std::move(r->second));
        }
      }
      if (!basis.empty()) total[w] = std::move(basis);
    }
    frontier = std::move(next);
  }
  return total;
}

DecompositionReport decompose(const AlgebraHandle& handle, const WeightModule& m) {
  if (&m.handle() != &handle) throw HandleMismatch("module was built over a different algebra handle");
  DecompositionReport report;
  report.module_dim = m.total_dim();
  report.singular = singular_vectors(m);
  std::map<std::size_t, std::vector<std::vector<Scalar>>> all_spans;
  for (const auto& [w, basis] : report.singular) {
    const Weight& chi = m.weight(w);
    auto dom = is_dominant(handle, chi);
    if (!dom)
      throw AuditFailure("singular vector of weight " + weight_label(handle, chi) + " whose weight is not dominant");
    HighestWeightModule simple = simple_module(handle, chi);
    Summand s{chi, w, *dom, basis.size(), simple.module.total_dim()};
    report.audited_dim += s.multiplicity * s.simple_dim;
    for (const auto& v : basis) {
      auto span = lowering_span(m, w, v);
      std::size_t span_dim = 0;
      for (auto& [u, vecs] : span) {
        span_dim += vecs.size();
        auto& dst = all_spans[u];
        dst.insert(dst.end(), vecs.begin(), vecs.end());
      }
      if (span_dim != s.simple_dim) {
        std::ostringstream msg;
        msg << "U-span of a singular vector of weight " << weight_label(handle, chi) << " has dimension " << span_dim
            << ", expected " << s.simple_dim;
        throw AuditFailure(msg.str());
      }
    }
    report.summands.push_back(std::move(s));
  }
  if (report.audited_dim != report.module_dim) {
    std::ostringstream msg;
    msg << "dimension audit failed: summands account for " << report.audited_dim << " of " << report.module_dim;
    for (const auto& s : report.summands)
      msg << "; " << weight_label(handle, s.highest) << " x" << s.multiplicity << " (dim " << s.simple_dim << ")";
    throw AuditFailure(msg.str());
  }
  std::size_t spanned = 0;
  for (const auto& [w, vecs] : all_spans) spanned += span_basis(vecs, m.dim(w)).size();
  report.direct = spanned == report.module_dim;
  if (!report.direct)
    throw AuditFailure("U-spans of singular vectors span " + std::to_string(spanned) + " of " +
                       std::to_string(report.module_dim) + " dimensions");
  return report;
}

bool is_integrable(const WeightModule& m) {
  const std::size_t theta = m.handle().theta();
  const std::size_t n = m.total_dim();
  for (Side side : {Side::Plus, Side::Minus}) {
    for (std::size_t i = 0; i < theta; ++i) {
      for (std::size_t w = 0; w < m.weight_count(); ++w)
        for (std::size_t c = 0; c < m.dim(w); ++c) {
          std::optional<std::pair<std::size_t, std::vector<Scalar>>> cur{{w, unit_vector(m.dim(w), c)}};
          for (std::size_t step = 0; step < n && cur; ++step) cur = m.act(side, i, cur->first, cur->second);
          if (cur) return false;
        }
    }
  }
  return true;
}

// ---------------------------------------------------------------- G-function

GFunction::GFunction(const AlgebraHandle& handle, Weight anchor, bool allow_degenerate)
    : handle_(&handle), anchor_(std::move(anchor)) {
  if (!allow_degenerate && !check_nli(handle.datum()))
    throw NliFails("the diagonal braiding entries are not N-linearly independent");
}

UnitScalar GFunction::q_alpha(const DegreeVector& alpha) const {
  const ReducedDatum& d = handle_->datum();
  UnitScalar out;
  for (std::size_t i = 0; i < d.theta(); ++i) {
    const long n = alpha[i];
    out *= d.q(i, i).pow(n * (n + 1));
    for (std::size_t j = i + 1; j < d.theta(); ++j) out *= (d.q(i, j) * d.q(j, i)).pow(n * alpha[j]);
  }
  return out;
}

UnitScalar GFunction::operator()(const Weight& chi) const {
  const ReducedDatum& d = handle_->datum();
  auto alpha = try_solve_weight_difference(chi, anchor_, d.chi);
  if (!alpha) throw NotInCoset("character is not in the coset of the anchor");
  GroupElement k = group_power(d.K, *alpha, d.group_rank);
  GroupElement l = group_power(d.L, *alpha, d.group_rank);
  return anchor_(k * l) * q_alpha(*alpha);
}

// ------------------------------------------------------------------ Casimir

Matrix<Scalar> casimir_plain(const WeightModule& m) {
  const AlgebraHandle& handle = m.handle();
  const ReducedDatum& d = handle.datum();
  Matrix<Scalar> out(m.total_dim(), m.total_dim());
  for (std::size_t w = 0; w < m.weight_count(); ++w) {
    for (std::size_t t = 0; t < m.weight_count(); ++t) {
      auto alpha = try_solve_weight_difference(m.weight(t), m.weight(w), d.chi);
      if (!alpha || !alpha->is_nonnegative()) continue;
      const DualBases& dual = handle.dual_bases(*alpha);
      for (std::size_t c = 0; c < m.dim(w); ++c) {
        const auto e = unit_vector(m.dim(w), c);
        std::vector<std::optional<std::vector<Scalar>>> raised(dual.e_words.size());
        for (std::size_t l = 0; l < dual.e_words.size(); ++l) {
          if (auto r = m.act_word(Side::Plus, dual.e_words[l], w, e)) raised[l] = std::move(r->second);
        }
        std::vector<Scalar> col(m.dim(w), Scalar(0));
        for (std::size_t k = 0; k < dual.x_words.size(); ++k) {
          std::vector<Scalar> v(m.dim(t), Scalar(0));
          bool any = false;
          for (std::size_t l = 0; l < dual.e_words.size(); ++l) {
            if (!raised[l] || dual.y(k, l).is_zero()) continue;
            add_scaled(v, *raised[l], dual.y(k, l));
            any = true;
          }
          if (!any || all_zero(v)) continue;
          // S(F_{j1}...F_{jn}) applied as v ← −F_j L_j v for j = j1, ..., jn
          std::optional<std::pair<std::size_t, std::vector<Scalar>>> cur{{t, std::move(v)}};
          for (std::uint8_t j : dual.x_words[k]) {
            const Scalar l_value = m.weight(cur->first)(d.L[j]).to_scalar();
            auto next = m.act(Side::Minus, j, cur->first, cur->second);
            if (!next) {
              cur.reset();
              break;
            }
            for (auto& x : next->second) x = -(x * l_value);
            cur = std::move(next);
          }
          if (!cur) continue;
          if (cur->first != w) throw AuditFailure("Casimir term left its weight space");
          add_scaled(col, cur->second, Scalar(1));
        }
        for (std::size_t r = 0; r < col.size(); ++r) {
          if (!col[r].is_zero()) out(m.offset(w) + r, m.offset(w) + c) += col[r];
        }
      }
    }
  }
  return out;
}

Matrix<Scalar> casimir_apply(const WeightModule& m, const GFunction& g) {
  std::vector<Scalar> factor(m.weight_count());
  for (std::size_t w = 0; w < m.weight_count(); ++w) {
    try {
      factor[w] = g(m.weight(w)).to_scalar();
    } catch (const NotInCoset&) {
      throw CosetMismatch("module weight " + weight_label(m.handle(), m.weight(w)) + " is outside the coset of G");
    }
  }
  Matrix<Scalar> omega = casimir_plain(m);
  for (std::size_t w = 0; w < m.weight_count(); ++w)
    for (std::size_t c = 0; c < m.dim(w); ++c)
      for (std::size_t r = 0; r < m.total_dim(); ++r) {
        auto& x = omega(r, m.offset(w) + c);
        if (!x.is_zero()) x *= factor[w];
      }
  for (Side side : {Side::Plus, Side::Minus}) {
    for (std::size_t i = 0; i < m.handle().theta(); ++i) {
      Matrix<Scalar> a = m.full_matrix(side, i);
      if (!(omega * a == a * omega))
        throw AuditFailure(std::string("Omega_G does not commute with ") + (side == Side::Plus ? "E_" : "F_") +
                           std::to_string(i + 1));
    }
  }
  return omega;
}

std::vector<CasimirEigen> casimir_eigenvalues(const WeightModule& m, const DecompositionReport& report,
                                              const GFunction& g) {
  Matrix<Scalar> omega = casimir_apply(m, g);
  std::vector<CasimirEigen> out;
  for (const auto& s : report.summands) {
    CasimirEigen e{s.highest, g(s.highest), true};
    const Scalar expected = e.expected.to_scalar();
    for (const auto& v : report.singular.at(s.weight_index)) {
      for (const auto& [w, basis] : lowering_span(m, s.weight_index, v)) {
        for (const auto& b : basis) {
          std::vector<Scalar> global(m.total_dim(), Scalar(0));
          for (std::size_t k = 0; k < b.size(); ++k) global[m.offset(w) + k] = b[k];
          auto image = omega.apply(global);
          for (std::size_t k = 0; k < image.size(); ++k) {
            if (image[k] != expected * global[k]) e.scalar_on_span = false;
          }
        }
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

// --------------------------------------------------------------- components

ReducedDatum sub_datum(const ReducedDatum& datum, const std::vector<std::size_t>& vertices) {
  ReducedDatum out;
  out.name = datum.name;
  out.params = datum.params;
  out.group_rank = datum.group_rank;
  for (std::size_t v : vertices) {
    if (v >= datum.theta()) throw RankMismatch("vertex index out of range");
    out.K.push_back(datum.K[v]);
    out.L.push_back(datum.L[v]);
    out.chi.push_back(datum.chi[v]);
    out.ell.push_back(datum.ell[v]);
  }
  return out;
}

FactorizationReport component_factorization_check(const AlgebraHandle& handle, const Weight& chi) {
  const CartanData& cartan = handle.cartan();
  if (cartan.connected()) throw ConnectedDiagram("the Dynkin diagram is connected");
  FactorizationReport report;
  report.first_component = cartan.components[0];
  for (std::size_t k = 1; k < cartan.components.size(); ++k)
    report.rest.insert(report.rest.end(), cartan.components[k].begin(), cartan.components[k].end());
  std::sort(report.first_component.begin(), report.first_component.end());
  std::sort(report.rest.begin(), report.rest.end());

  HighestWeightModule whole = simple_module(handle, chi);
  AlgebraHandle first(sub_datum(handle.datum(), report.first_component), handle.max_degree());
  AlgebraHandle rest(sub_datum(handle.datum(), report.rest), handle.max_degree());
  HighestWeightModule l_first = simple_module(first, chi);
  HighestWeightModule l_rest = simple_module(rest, chi);
  report.dim = whole.module.total_dim();
  report.dim_first = l_first.module.total_dim();
  report.dim_rest = l_rest.module.total_dim();

  std::map<DegreeVector, std::size_t> dims;
  for (std::size_t k = 0; k < whole.degrees.size(); ++k) dims[whole.degrees[k]] = whole.module.dim(k);
  bool ok = true;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < l_first.degrees.size(); ++a)
    for (std::size_t b = 0; b < l_rest.degrees.size(); ++b) {
      DegreeVector alpha = DegreeVector::zero(handle.theta());
      for (std::size_t k = 0; k < report.first_component.size(); ++k)
        alpha[report.first_component[k]] = l_first.degrees[a][k];
      for (std::size_t k = 0; k < report.rest.size(); ++k) alpha[report.rest[k]] = l_rest.degrees[b][k];
      auto it = dims.find(alpha);
      ok = ok && it != dims.end() && it->second == l_first.module.dim(a) * l_rest.module.dim(b);
      ++pairs;
    }
  report.weights_factor = ok && pairs == dims.size();
  return report;
}

}  // namespace hopfkit
