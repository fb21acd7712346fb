#include "webiso/linefields.hpp"

#include <algorithm>
#include <numeric>

#include "webiso/error.hpp"

namespace webiso {

using linalg::Matrix;
using linalg::Vector;

LineField line_bracket(const LineField& g, const LineField& h) {
  if (g.center() != h.center()) throw ShapeError("line_bracket: center mismatch");
  if (g.order() != h.order()) throw ShapeError("line_bracket: truncation order mismatch");
  if (g.order() == 0) throw ShapeError("line_bracket of order-0 jets");
  const int w = g.order() - 1;
  return g.truncate(w) * uni_derivative(h) - h.truncate(w) * uni_derivative(g);
}

std::optional<int> line_order(const LineField& g) { return g.valuation(); }

UniJet rectify(const LineField& g) {
  if (g.value() == 0) throw DomainError("cannot rectify a line field vanishing at its center");
  return uni_integral(uni_reciprocal(g), g.center());
}

LineField transform_field(const LineField& h, const UniJet& y) {
  if (h.center() != y.center()) throw ShapeError("transform_field: center mismatch");
  const int w = std::min(h.order(), y.order() - 1);
  UniJet pushed = uni_derivative(y).truncate(w) * h.truncate(w);
  return uni_compose(pushed, uni_reversion(y.truncate(w + 1)).truncate(w));
}

namespace {

Vector coeffs_upto(const UniJet& u, int order) {
  return Vector(u.coeffs().begin(), u.coeffs().begin() + order + 1);
}

UniJet combine(const std::vector<UniJet>& fields, const Vector& c, int order) {
  UniJet acc = UniJet::constant(fields.front().center(), order, 0);
  for (std::size_t k = 0; k < fields.size(); ++k)
    if (c[k] != 0) acc = acc + c[k] * fields[k].truncate(order);
  return acc;
}

bool degree_at_most(const UniJet& u, int d) { return u.degree() <= d; }

}  // namespace

LineReduction reduce_line_algebra(const std::vector<LineField>& fields) {
  LineReduction out;
  if (fields.empty()) return out;
  int w = fields.front().order();
  for (const auto& f : fields) {
    if (f.center() != fields.front().center()) throw ShapeError("reduce_line_algebra: center mismatch");
    w = std::min(w, f.order());
  }
  if (w < 2) throw ShapeError("reduce_line_algebra needs order >= 2");
  std::vector<Vector> vecs;
  for (const auto& f : fields) vecs.push_back(coeffs_upto(f, w));
  const auto rref = linalg::span_basis(vecs, static_cast<std::size_t>(w) + 1);
  out.dim = static_cast<int>(rref.size());
  if (out.dim == 0) return out;
  const Rational center = fields.front().center();
  std::vector<UniJet> basis;
  for (const auto& v : rref) basis.emplace_back(center, v);

  // Closure, one order down.
  std::vector<Vector> low;
  for (const auto& b : basis) low.push_back(coeffs_upto(b, w - 1));
  std::vector<Vector> brackets;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      Vector br = line_bracket(basis[a], basis[b]).coeffs();
      if (!linalg::coordinates(low, br)) throw Error("line fields are not closed under the bracket");
      brackets.push_back(std::move(br));
    }
  if (out.dim > 3)
    throw ConsistencyAlarm("bracket-closed span of line fields of dimension " + std::to_string(out.dim) + " > 3");

  std::optional<UniJet> rectifier;
  if (out.dim == 1) {
    if (basis[0].value() != 0) rectifier = basis[0];
  } else if (out.dim == 2) {
    auto c = linalg::coordinates(low, brackets[0]);
    UniJet derived = combine(basis, *c, w);
    if (derived.value() != 0) rectifier = derived;
  } else {
    // Rectify by a nilpotent element (Killing form zero) nonzero at the center.
    lie::StructureConstants sc(3);
    for (std::size_t a = 0, p = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b, ++p) {
        auto c = *linalg::coordinates(low, brackets[p]);
        for (std::size_t r = 0; r < 3; ++r) {
          sc(a, b, r) = c[r];
          sc(b, a, r) = -c[r];
        }
      }
    auto nilpotent = [&](const Vector& x) {
      Matrix a = lie::ad(sc, x);
      Matrix sq = a * a;
      return sq(0, 0) + sq(1, 1) + sq(2, 2) == 0;
    };
    for (std::size_t k = 0; k < 3 && !rectifier; ++k) {
      Vector e(3);
      e[k] = 1;
      if (basis[k].value() != 0 && nilpotent(e)) rectifier = basis[k];
    }
    if (!rectifier) {
      const auto triple = lie::chevalley_triple(sc, lie::whole(3));
      for (int radius = 1; radius <= 4 && !rectifier; ++radius)
        for (int a = 0; a <= radius && !rectifier; ++a)
          for (int b : {radius - a, a - radius}) {
            if (std::gcd(a, b) != 1 || (a == 0 && b < 0)) continue;
            UniJet cand = combine(basis, lie::nilpotent_triple(triple, a, b)[0], w);
            if (cand.value() != 0) {
              rectifier = cand;
              break;
            }
          }
    }
  }
  if (!rectifier) return out;

  const UniJet y = rectify(*rectifier);
  out.change = y;
  std::vector<UniJet> moved;
  for (const auto& b : basis) {
    UniJet t = transform_field(b, y).truncate(w - 1);
    if (!degree_at_most(t, out.dim - 1))
      throw Error("rectified line field has degree above " + std::to_string(out.dim - 1));
    moved.push_back(std::move(t));
  }
  switch (out.dim) {
    case 1:
      out.normal_basis = {{1}};
      break;
    case 2: {
      for (const auto& t : moved) {
        if (t[1] == 0) continue;
        out.c = t[0] / t[1] - center;
        break;
      }
      out.normal_basis = {{1}, {out.c, 1}};
      break;
    }
    default:
      out.normal_basis = {{1}, {0, 1}, {0, 0, 1}};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Diagonal fields

int DiagonalField::order() const {
  int w = components.empty() ? 0 : components.front().order();
  for (const auto& c : components) w = std::min(w, c.order());
  return w;
}

DiagonalField DiagonalField::truncate(int order) const {
  DiagonalField out;
  for (const auto& c : components) out.components.push_back(c.truncate(order));
  return out;
}

bool DiagonalField::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const UniJet& u) { return u.is_zero(); });
}

std::vector<Rational> DiagonalField::at_base() const {
  std::vector<Rational> v;
  for (const auto& c : components) v.push_back(c.value());
  return v;
}

std::vector<Rational> DiagonalField::flatten() const {
  std::vector<Rational> v;
  for (const auto& c : components) v.insert(v.end(), c.coeffs().begin(), c.coeffs().end());
  return v;
}

DiagonalField field_bracket(const DiagonalField& a, const DiagonalField& b) {
  if (a.n() != b.n()) throw ShapeError("field_bracket: dimension mismatch");
  DiagonalField out;
  for (std::size_t i = 0; i < a.n(); ++i) out.components.push_back(line_bracket(a.components[i], b.components[i]));
  return out;
}

DiagonalField field_combination(const std::vector<DiagonalField>& fields, const std::vector<Rational>& coeffs) {
  if (fields.empty() || fields.size() != coeffs.size()) throw ShapeError("field_combination: size mismatch");
  DiagonalField out;
  const int w = fields.front().order();
  for (std::size_t i = 0; i < fields.front().n(); ++i) {
    UniJet acc = UniJet::constant(fields.front().components[i].center(), w, 0);
    for (std::size_t k = 0; k < fields.size(); ++k)
      if (coeffs[k] != 0) acc = acc + coeffs[k] * fields[k].components[i].truncate(w);
    out.components.push_back(std::move(acc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Block normal form

namespace {

class BlockReducer {
 public:
  BlockReducer(const ComponentMatrix& m, const lie::StructureConstants& sc, int ck)
      : mat_(m), sc_(sc), ck_(ck), rows_(m.size()), cols_(m.front().n()) {
    used_.assign(cols_, false);
    out_.column_changes.assign(cols_, std::nullopt);
    out_.check_order = ck;
  }

  BlockDecomposition run() {
    lie::Subspace u = lie::whole(rows_);
    while (auto i = pick_column(u, 3)) u = split_sl2(*i, u);
    while (auto i = pick_column(u, 2)) u = split_n(*i, u);
    out_.constant_rows = u;
    rectify_remaining();
    assemble_and_verify();
    return out_;
  }

 private:
  UniJet entry(const Vector& u, std::size_t i) const {
    UniJet acc = UniJet::constant(mat_.front().components[i].center(), ck_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
      if (u[r] != 0) acc = acc + u[r] * mat_[r].components[i].truncate(ck_);
    return acc;
  }

  std::vector<Vector> images(std::size_t i) const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(mat_[r].components[i].truncate(ck_).coeffs());
    return out;
  }

  std::optional<std::size_t> pick_column(const lie::Subspace& u, std::size_t want) const {
    for (std::size_t i = 0; i < cols_; ++i) {
      if (used_[i]) continue;
      std::vector<Vector> vecs;
      for (const auto& x : u) vecs.push_back(entry(x, i).coeffs());
      const std::size_t d = linalg::span_basis(vecs, static_cast<std::size_t>(ck_) + 1).size();
      if (d > 3) throw ConsistencyAlarm("column " + std::to_string(i + 1) + " carries a line algebra of dimension > 3");
      if (d == want) return i;
    }
    return std::nullopt;
  }

  std::string col_name(std::size_t j) const { return "column " + std::to_string(j + 1); }

  // Coordinate on column j in which F becomes d/dy, and the constant c of
  // a companion field G = (y + c) written in that coordinate.
  UniJet block_coordinate(const Vector& f, std::size_t j) const {
    UniJet fj = entry(f, j);
    if (fj.value() == 0)
      throw Error(col_name(j) + ": block generator F vanishes at the base point; the base point is not generic");
    return rectify(fj);
  }

  void order_block(Block& b) const {
    // Three columns with pairwise distinct constants first, then the rest.
    std::vector<std::size_t> order;
    std::vector<bool> taken(b.columns.size(), false);
    for (std::size_t k = 0; k < b.columns.size() && order.size() < 3; ++k) {
      bool distinct = true;
      for (auto o : order) distinct &= b.constants[o] != b.constants[k];
      if (distinct) {
        order.push_back(k);
        taken[k] = true;
      }
    }
    for (std::size_t k = 0; k < b.columns.size(); ++k)
      if (!taken[k]) order.push_back(k);
    Block sorted = b;
    for (std::size_t k = 0; k < order.size(); ++k) {
      sorted.columns[k] = b.columns[order[k]];
      sorted.constants[k] = b.constants[order[k]];
    }
    b = std::move(sorted);
  }

  lie::Subspace split_sl2(std::size_t i, const lie::Subspace& u) {
    const lie::Subspace k = lie::kernel_within(images(i), u, rows_);
    const lie::Subspace c = lie::centralizer(sc_, k, u);
    const lie::Subspace ideal = lie::bracket_span(sc_, c, c);
    if (ideal.size() != 3)
      throw ConsistencyAlarm(col_name(i) + ": the factor acting on this column has derived dimension " +
                             std::to_string(ideal.size()) + ", expected sl(2)");
    // The rectifying element must be nilpotent: rectifying a semisimple one turns the
    // column into {1, e^y, e^-y} instead of polynomials of degree <= 2.
    std::vector<std::size_t> acting;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (used_[j]) continue;
      for (const auto& x : ideal)
        if (!entry(x, j).is_zero()) {
          acting.push_back(j);
          break;
        }
    }
    const std::vector<Vector> triple = lie::chevalley_triple(sc_, ideal);
    std::vector<Vector> fhe;
    for (int radius = 1; radius <= 8 && fhe.empty(); ++radius)
      for (int a = 0; a <= radius && fhe.empty(); ++a)
        for (int b : {radius - a, a - radius}) {
          if (std::gcd(a, b) != 1 || (a == 0 && b < 0)) continue;
          auto cand = lie::nilpotent_triple(triple, a, b);
          bool ok = true;
          for (auto j : acting) ok &= entry(cand[0], j).value() != 0;
          if (ok) {
            fhe = std::move(cand);
            break;
          }
        }
    if (fhe.empty()) throw Error(col_name(i) + ": no nilpotent sl(2) element is nonzero at the base point on every column");

    Block b{Block::Kind::Sl2, {}, {}, {}};
    for (auto j : acting) {
      const UniJet yj = block_coordinate(fhe[0], j);
      const UniJet h = transform_field(entry(fhe[1], j), yj);
      const Rational cs = h[0];
      const Rational base = h.center();
      if (h.degree() > 1 || h[1] != 1)
        throw ConsistencyAlarm(col_name(j) + ": H is not of the form x + c after rectification");
      const UniJet e = transform_field(entry(fhe[2], j), yj);
      if (e.degree() > 2 || e[0] != cs * cs || e[1] != 2 * cs || e[2] != 1)
        throw ConsistencyAlarm(col_name(j) + ": E is not of the form (x + c)^2 after rectification");
      b.columns.push_back(j);
      b.constants.push_back(cs - base);
      out_.column_changes[j] = yj;
    }
    if (b.columns.size() < 3)
      throw ConsistencyAlarm("sl(2) block on " + std::to_string(b.columns.size()) + " column(s); at least 3 are required");
    order_block(b);
    if (b.constants[0] == b.constants[1] || b.constants[0] == b.constants[2] || b.constants[1] == b.constants[2])
      throw ConsistencyAlarm("sl(2) block lacks three columns with pairwise distinct constants");
    const Rational s = b.constants[0];
    Vector h = linalg::axpy(fhe[1], -s, fhe[0]);
    Vector e = linalg::axpy(linalg::axpy(fhe[2], -2 * s, fhe[1]), s * s, fhe[0]);
    b.generators = {fhe[0], h, e};
    for (auto& cj : b.constants) cj -= s;
    for (auto j : b.columns) used_[j] = true;
    out_.sl2_blocks.push_back(std::move(b));
    return k;
  }

  lie::Subspace split_n(std::size_t i, const lie::Subspace& u) {
    const lie::Subspace k = lie::kernel_within(images(i), u, rows_);
    const lie::Subspace c = lie::centralizer(sc_, k, u);
    const lie::Subspace derived = lie::bracket_span(sc_, c, c);
    if (derived.size() != 1)
      throw ConsistencyAlarm(col_name(i) + ": the factor acting on this column has derived dimension " +
                             std::to_string(derived.size()) + ", expected the 2-dimensional non-abelian algebra");
    const Vector f = derived[0];
    Matrix a(rows_, c.size());
    for (std::size_t q = 0; q < c.size(); ++q) {
      Vector br = lie::bracket(sc_, f, c[q]);
      for (std::size_t r = 0; r < rows_; ++r) a(r, q) = br[r];
    }
    auto x = linalg::solve(a, f);
    if (!x) throw ConsistencyAlarm(col_name(i) + ": no E with [F, E] = F in the centralizer");
    Vector e(rows_);
    for (std::size_t q = 0; q < c.size(); ++q) e = linalg::axpy(e, (*x)[q], c[q]);

    Block b{Block::Kind::N, {}, {}, {}};
    for (std::size_t j = 0; j < cols_; ++j) {
      if (used_[j] || entry(f, j).is_zero()) continue;
      const UniJet yj = block_coordinate(f, j);
      const UniJet ej = transform_field(entry(e, j), yj);
      if (ej.degree() > 1 || ej[1] != 1)
        throw ConsistencyAlarm(col_name(j) + ": E is not of the form x + c after rectification");
      b.columns.push_back(j);
      b.constants.push_back(ej[0] - ej.center());
      out_.column_changes[j] = yj;
    }
    if (b.columns.empty()) throw ConsistencyAlarm(col_name(i) + ": n factor has no block column");
    const Rational s = b.constants[0];
    b.generators = {f, linalg::axpy(e, -s, f)};
    for (auto& cj : b.constants) cj -= s;
    for (auto j : b.columns) used_[j] = true;
    out_.n_blocks.push_back(std::move(b));
    return k;
  }

  // Rows allowed to be nonzero on the non-block columns, in output order.
  std::vector<Vector> tail_rows() const {
    std::vector<Vector> rows;
    for (const auto& b : out_.n_blocks) rows.push_back(b.generators[1]);
    for (const auto& c : out_.constant_rows) rows.push_back(c);
    return rows;
  }

  void rectify_remaining() {
    const auto rows = tail_rows();
    for (std::size_t j = 0; j < cols_; ++j) {
      if (used_[j]) continue;
      bool all_zero = true, all_constant = true;
      for (std::size_t r = 0; r < rows_; ++r) {
        Vector e(rows_);
        e[r] = 1;
        UniJet v = entry(e, j);
        all_zero &= v.is_zero();
        all_constant &= v.degree() <= 0;
      }
      if (all_zero) {
        out_.zero_columns.push_back(j);
        continue;
      }
      if (all_constant) continue;
      const Vector* pick = nullptr;
      for (const auto& r : rows)
        if (entry(r, j).value() != 0) {
          pick = &r;
          break;
        }
      if (!pick) throw Error(col_name(j) + ": every field vanishes at the base point; the base point is not generic");
      const UniJet g = entry(*pick, j);
      // y' = a / g keeps the base value a of the rectifying row.
      UniJet y = rectify(g);
      std::vector<Rational> c(y.coeffs());
      for (std::size_t d = 1; d < c.size(); ++d) c[d] *= g.value();
      out_.column_changes[j] = UniJet(y.center(), std::move(c));
    }
  }

  void assemble_and_verify() {
    std::vector<Vector> rows;
    for (const auto& b : out_.sl2_blocks) rows.insert(rows.end(), b.generators.begin(), b.generators.end());
    for (const auto& b : out_.n_blocks) rows.insert(rows.end(), b.generators.begin(), b.generators.end());
    rows.insert(rows.end(), out_.constant_rows.begin(), out_.constant_rows.end());
    if (rows.size() != rows_ || linalg::rank(Matrix::from_rows(rows, rows_)) != rows_)
      throw ConsistencyAlarm("block reduction does not produce a basis of the algebra");
    out_.row_transform = Matrix::from_rows(rows, rows_);

    std::vector<int> owner(cols_, -1);  // row index of the block's F, or -1
    std::vector<std::size_t> perm;
    std::size_t row = 0;
    std::vector<std::pair<std::size_t, const Block*>> placed;
    for (const auto& b : out_.sl2_blocks) {
      placed.emplace_back(row, &b);
      row += 3;
    }
    for (const auto& b : out_.n_blocks) {
      placed.emplace_back(row, &b);
      row += 2;
    }
    for (const auto& [start, b] : placed)
      for (auto j : b->columns) {
        owner[j] = static_cast<int>(start);
        perm.push_back(j);
      }
    std::vector<bool> is_zero_col(cols_, false);
    for (auto j : out_.zero_columns) is_zero_col[j] = true;
    for (std::size_t j = 0; j < cols_; ++j)
      if (owner[j] < 0 && !is_zero_col[j]) perm.push_back(j);
    perm.insert(perm.end(), out_.zero_columns.begin(), out_.zero_columns.end());
    out_.column_permutation = perm;

    const std::size_t tail_start = 3 * out_.S();
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < cols_; ++j) {
        UniJet v = entry(rows[r], j);
        if (out_.column_changes[j]) v = transform_field(v, *out_.column_changes[j]);
        const Rational base = v.center();
        const int w = v.order();
        auto fail = [&](const std::string& what) {
          throw ConsistencyAlarm("block shape violated at row " + std::to_string(r + 1) + ", " + col_name(j) + ": " +
                                 what);
        };
        if (owner[j] >= 0) {
          const std::size_t start = static_cast<std::size_t>(owner[j]);
          const Block* b = nullptr;
          for (const auto& [s, blk] : placed)
            if (s == start) b = blk;
          const auto pos = static_cast<std::size_t>(std::find(b->columns.begin(), b->columns.end(), j) - b->columns.begin());
          const Rational& c = b->constants[pos];
          UniJet expected = UniJet::constant(base, w, 0);
          if (r == start) expected = UniJet::constant(base, w, 1);
          else if (r == start + 1) expected = UniJet::from_polynomial(base, w, {c, 1});
          else if (r == start + 2 && b->kind == Block::Kind::Sl2) expected = UniJet::from_polynomial(base, w, {c * c, 2 * c, 1});
          if (v != expected) fail("expected " + expected.dump());
        } else {
          const bool may_be_constant =
              r >= tail_start && (r >= tail_start + 2 * out_.N() || (r - tail_start) % 2 == 1);
          if (may_be_constant ? v.degree() > 0 : !v.is_zero()) fail(may_be_constant ? "expected a constant" : "expected 0");
        }
      }
  }

  const ComponentMatrix& mat_;
  const lie::StructureConstants& sc_;
  int ck_;
  std::size_t rows_, cols_;
  std::vector<bool> used_;
  BlockDecomposition out_;
};

}  // namespace

BlockDecomposition block_normal_form(const ComponentMatrix& m, const lie::StructureConstants& sc,
                                     std::optional<int> check_order) {
  if (m.empty()) return {};
  if (sc.dim() != m.size()) throw ShapeError("structure constants do not match the number of rows");
  int lowest = m.front().order();
  for (const auto& row : m) {
    if (row.n() != m.front().n()) throw ShapeError("component matrix rows differ in length");
    lowest = std::min(lowest, row.order());
  }
  const int ck = check_order.value_or(lowest - 2);
  if (ck < 2 || ck > lowest) throw ShapeError("block_normal_form: check order must lie in [2, entry order]");
  return BlockReducer(m, sc, ck).run();
}

}  // namespace webiso
