#include "arrfree/matrix.hpp"

#include <algorithm>

namespace arrfree {

Matrix Matrix::identity(const FieldPtr& f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    Matrix r(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

std::vector<FieldElement> Matrix::row_times(const std::vector<FieldElement>& v) const {
    if (static_cast<int>(v.size()) != rows_) throw Error("covector length mismatch");
    std::vector<FieldElement> r(cols_, FieldElement::zero(field_));
    for (int i = 0; i < rows_; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < cols_; ++j) r[j] += v[i] * at(i, j);
    }
    return r;
}

namespace {

// Rescale a row of Q or Q(zeta) entries to primitive integer content.
void normalize_content(FieldPtr const& f, FieldElement* row, int cols) {
    if (f->kind() == FieldKind::Prime) return;
    mpz_class den_lcm = 1, num_gcd = 0;
    auto visit = [&](const mpq_class& q) {
        if (q == 0) return;
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        den_lcm = l;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
        num_gcd = g;
    };
    for (int j = 0; j < cols; ++j) {
        if (f->kind() == FieldKind::Rational)
            visit(row[j].rat());
        else
            for (const auto& q : row[j].coords()) visit(q);
    }
    if (num_gcd == 0) return;  // zero row
    if (den_lcm == 1 && num_gcd == 1) return;
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    FieldElement s = FieldElement::from_mpq(f, scale);
    for (int j = 0; j < cols; ++j) row[j] = row[j] * s;
}

}  // namespace

std::vector<int> Matrix::rref() {
    std::vector<int> pivots;
    int lead = 0;
    auto row = [&](int r) { return e_.data() + static_cast<std::size_t>(r) * cols_; };
    for (int col = 0; col < cols_ && lead < rows_; ++col) {
        int pr = -1;
        for (int r = lead; r < rows_; ++r)
            if (!at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != lead)
            std::swap_ranges(row(pr), row(pr) + cols_, row(lead));
        FieldElement pinv = at(lead, col).inv();
        for (int j = col; j < cols_; ++j) at(lead, j) = at(lead, j) * pinv;
        for (int r = 0; r < rows_; ++r) {
            if (r == lead || at(r, col).is_zero()) continue;
            FieldElement factor = at(r, col);
            for (int j = col; j < cols_; ++j) at(r, j) = at(r, j) - factor * at(lead, j);
            if (r > lead) normalize_content(field_, row(r), cols_);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

int Matrix::rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref().size());
}

std::vector<std::vector<FieldElement>> Matrix::kernel() const {
    Matrix m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> basis;
    for (int fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
        v[fc] = FieldElement::one(field_);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -m.at(static_cast<int>(k), fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Matrix aug(field_, rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElement::one(field_);
    }
    auto pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= cols_) return std::nullopt;
    for (int k = 0; k < rows_; ++k)
        if (pivots[k] != k) return std::nullopt;
    Matrix inv(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

}  // namespace arrfree
