#include "catgr/ground.hpp"

#include "catgr/error.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace catgr {

namespace mp = boost::multiprecision;

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotInRing: return "NotInRing";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CyclicQuiver: return "CyclicQuiver";
        case ErrorCode::UnknownObject: return "UnknownObject";
        case ErrorCode::UnknownMorphism: return "UnknownMorphism";
        case ErrorCode::ObjectMismatch: return "ObjectMismatch";
        case ErrorCode::CategoryMismatch: return "CategoryMismatch";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
        case ErrorCode::InvalidModule: return "InvalidModule";
        case ErrorCode::InvalidFunctor: return "InvalidFunctor";
        case ErrorCode::NotStrict: return "NotStrict";
        case ErrorCode::NotRingValued: return "NotRingValued";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingSpec: return "MissingSpec";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- GroundRing

namespace {

Integer mod_floor(const Integer& a, const Integer& p) {
    Integer r = a % p;
    if (r < 0) r += p;
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& p) {
    // a is nonzero mod p and p is prime
    return mp::powm(mod_floor(a, p), p - 2, p);
}

}  // namespace

GroundRing GroundRing::rationals() {
    GroundRing r;
    r.kind_ = Kind::Rationals;
    return r;
}

GroundRing GroundRing::prime_field(const Integer& p) {
    if (p < 2 || !mp::miller_rabin_test(p, 32))
        throw Error(ErrorCode::InvalidArgument, "GF(p) requires a prime p, got " + p.str());
    GroundRing r;
    r.kind_ = Kind::PrimeField;
    r.p_ = p;
    return r;
}

GroundRing GroundRing::from_name(std::string_view name) {
    if (name == "Z") return integers();
    if (name == "Q") return rationals();
    if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
        auto digits = name.substr(3, name.size() - 4);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) {
                return c >= '0' && c <= '9';
            }))
            return prime_field(Integer(std::string(digits)));
    }
    throw Error(ErrorCode::ParseError, "unknown ring '" + std::string(name) + "' (expected Z, Q or GF(p))");
}

GroundRing GroundRing::fraction_field() const {
    return kind_ == Kind::Integers ? rationals() : *this;
}

std::string GroundRing::name() const {
    switch (kind_) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::PrimeField: return "GF(" + p_.str() + ")";
    }
    return "?";
}

bool GroundRing::contains(const Scalar& v) const {
    switch (kind_) {
        case Kind::Integers: return mp::denominator(v) == 1;
        case Kind::Rationals: return true;
        case Kind::PrimeField:
            return mp::denominator(v) == 1 && mp::numerator(v) >= 0 && mp::numerator(v) < p_;
    }
    return false;
}

Scalar GroundRing::normalize(const Scalar& v) const {
    switch (kind_) {
        case Kind::Integers:
            if (mp::denominator(v) != 1)
                throw Error(ErrorCode::NotInRing, v.str() + " is not an integer");
            return v;
        case Kind::Rationals: return v;
        case Kind::PrimeField: {
            const Integer& den = mp::denominator(v);
            if (den % p_ == 0)
                throw Error(ErrorCode::NotInRing, v.str() + " has no image in " + name());
            Integer num = mod_floor(mp::numerator(v), p_);
            if (den == 1) return Scalar(num);
            return Scalar(mod_floor(num * inverse_mod(den, p_), p_));
        }
    }
    return v;
}

Scalar GroundRing::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) {
        Integer s = mp::numerator(a) + mp::numerator(b);
        if (s >= p_) s -= p_;
        return Scalar(s);
    }
    return a + b;
}

Scalar GroundRing::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) {
        Integer s = mp::numerator(a) - mp::numerator(b);
        if (s < 0) s += p_;
        return Scalar(s);
    }
    return a - b;
}

Scalar GroundRing::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == Kind::PrimeField) return Scalar(Integer(mp::numerator(a) * mp::numerator(b)) % p_);
    return a * b;
}

Scalar GroundRing::neg(const Scalar& a) const {
    if (kind_ == Kind::PrimeField) return a == 0 ? a : Scalar(p_ - mp::numerator(a));
    return -a;
}

bool GroundRing::is_unit(const Scalar& a) const {
    if (a == 0) return false;
    if (kind_ == Kind::Integers) return a == 1 || a == -1;
    return true;
}

std::optional<Scalar> GroundRing::inverse(const Scalar& a) const {
    if (!is_unit(a)) return std::nullopt;
    if (kind_ == Kind::PrimeField) return Scalar(inverse_mod(mp::numerator(a), p_));
    return Scalar(1) / a;
}

Scalar GroundRing::parse(std::string_view text) const {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    auto strip_plus = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return std::string(s);
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+')
        throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(text) + "'");
    Integer d(strip_plus(den));
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return normalize(Scalar(Integer(strip_plus(num)), d));
}

std::string GroundRing::format(const Scalar& a) const {
    if (mp::denominator(a) == 1) return mp::numerator(a).str();
    return mp::numerator(a).str() + "/" + mp::denominator(a).str();
}

// ------------------------------------------------------------------- vectors

Vec zero_vector(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vector(std::size_t n, std::size_t k) {
    Vec v(n, Scalar(0));
    v.at(k) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s == 0; });
}

void axpy(const GroundRing& ring, Vec& acc, const Scalar& c, const Vec& v) {
    if (acc.size() != v.size())
        throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
    if (c == 0) return;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k] != 0) acc[k] = ring.add(acc[k], ring.mul(c, v[k]));
}

Vec add(const GroundRing& ring, const Vec& a, const Vec& b) {
    Vec out = a;
    axpy(ring, out, Scalar(1), b);
    return out;
}

Vec scale(const GroundRing& ring, const Scalar& c, const Vec& v) {
    Vec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = ring.mul(c, v[k]);
    return out;
}

std::string format_vector(const GroundRing& ring, const Vec& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ", ";
        s += ring.format(v[k]);
    }
    return s + "]";
}

// ------------------------------------------------------------------ matrices

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& columns) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows)
            throw Error(ErrorCode::DimensionMismatch, "column length differs from row count");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vec Matrix::column(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s == 0; });
}

bool Matrix::is_identity() const {
    if (!square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

Matrix multiply(const GroundRing& ring, const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw Error(ErrorCode::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " by " +
                                                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) out(i, j) = ring.add(out(i, j), ring.mul(aik, b(k, j)));
        }
    return out;
}

Matrix add(const GroundRing& ring, const Matrix& a, const Matrix& b) {
    Matrix out = a;
    axpy(ring, out, Scalar(1), b);
    return out;
}

Matrix scale(const GroundRing& ring, const Scalar& c, const Matrix& m) {
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k) out(r, k) = ring.mul(c, m(r, k));
    return out;
}

void axpy(const GroundRing& ring, Matrix& acc, const Scalar& c, const Matrix& m) {
    if (acc.rows() != m.rows() || acc.cols() != m.cols())
        throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    if (c == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t k = 0; k < m.cols(); ++k)
            if (m(r, k) != 0) acc(r, k) = ring.add(acc(r, k), ring.mul(c, m(r, k)));
}

Vec apply(const GroundRing& ring, const Matrix& m, const Vec& v) {
    if (m.cols() != v.size())
        throw Error(ErrorCode::DimensionMismatch, "matrix has " + std::to_string(m.cols()) +
                                                      " columns, vector has " + std::to_string(v.size()));
    Vec out = zero_vector(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0 && v[c] != 0) out[r] = ring.add(out[r], ring.mul(m(r, c), v[c]));
    return out;
}

std::string format_matrix(const GroundRing& ring, const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) s += ", ";
        Vec row(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
        s += format_vector(ring, row);
    }
    return s + "]";
}

namespace {

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan over a field.
Echelon row_reduce(const GroundRing& field, Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
        Scalar inv = *field.inverse(m(row, col));
        for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) = field.mul(inv, m(row, c));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Scalar f = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (m(row, c) != 0) m(r, c) = field.sub(m(r, c), field.mul(f, m(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

}  // namespace

std::size_t rank(const GroundRing& ring, Matrix m) {
    return row_reduce(ring.fraction_field(), std::move(m)).pivots.size();
}

std::optional<Solution> solve(const GroundRing& ring, const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length != rows");
    GroundRing field = ring.fraction_field();
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    auto ech = row_reduce(field, std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == a.cols()) return std::nullopt;
    Vec x = zero_vector(a.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, a.cols());
    return Solution{std::move(x), a.cols() - ech.pivots.size()};
}

std::optional<Matrix> inverse_matrix(const GroundRing& ring, const Matrix& m) {
    if (!m.square()) return std::nullopt;
    const std::size_t n = m.rows();
    GroundRing field = ring.fraction_field();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto ech = row_reduce(field, std::move(aug));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            const Scalar& v = ech.reduced(r, n + c);
            if (!ring.contains(v)) return std::nullopt;  // over Z: det is not ±1
            inv(r, c) = v;
        }
    return inv;
}

// -------------------------------------------------------------- free modules

FreeModule::FreeModule(GroundRing ring, std::vector<std::string> labels)
    : ring_(std::move(ring)), labels_(std::move(labels)) {
    std::set<std::string_view> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw Error(ErrorCode::InvalidArgument, "duplicate basis label '" + l + "'");
}

FreeModule FreeModule::of_rank(GroundRing ring, std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t k = 0; k < n; ++k) labels.push_back(prefix + std::to_string(k));
    return FreeModule(std::move(ring), std::move(labels));
}

std::optional<std::size_t> FreeModule::find(std::string_view label) const {
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k] == label) return k;
    return std::nullopt;
}

LinearMap::LinearMap(FreeModule dom, FreeModule cod, Matrix matrix)
    : dom_(std::move(dom)), cod_(std::move(cod)), matrix_(std::move(matrix)) {
    if (dom_.ring() != cod_.ring()) throw Error(ErrorCode::RingMismatch, "domain and codomain rings differ");
    if (matrix_.rows() != cod_.rank() || matrix_.cols() != dom_.rank())
        throw Error(ErrorCode::DimensionMismatch, "matrix shape does not match module ranks");
}

LinearMap identity_map(const FreeModule& m) { return LinearMap(m, m, Matrix::identity(m.rank())); }

LinearMap zero_map(const FreeModule& dom, const FreeModule& cod) {
    return LinearMap(dom, cod, Matrix(cod.rank(), dom.rank()));
}

LinearMap compose_linear(const LinearMap& g, const LinearMap& f) {
    if (g.ring() != f.ring()) throw Error(ErrorCode::RingMismatch, "cannot compose maps over different rings");
    if (f.cod().rank() != g.dom().rank())
        throw Error(ErrorCode::DimensionMismatch, "codomain of f has rank " + std::to_string(f.cod().rank()) +
                                                      ", domain of g has rank " + std::to_string(g.dom().rank()));
    return LinearMap(f.dom(), g.cod(), multiply(f.ring(), g.matrix(), f.matrix()));
}

LinearMap invert_linear(const LinearMap& f) {
    if (!f.matrix().square() || f.dom().rank() != f.cod().rank())
        throw Error(ErrorCode::NotSquare, "map is not square");
    auto inv = inverse_matrix(f.ring(), f.matrix());
    if (!inv) throw Error(ErrorCode::NotInvertible, "determinant is not a unit in " + f.ring().name());
    return LinearMap(f.cod(), f.dom(), std::move(*inv));
}

std::size_t DirectSum::global_index(std::size_t summand, std::size_t local) const {
    if (summand >= summand_count() || local >= summand_rank(summand))
        throw Error(ErrorCode::InvalidArgument, "direct sum index out of range");
    return offsets[summand] + local;
}

std::pair<std::size_t, std::size_t> DirectSum::local_index(std::size_t global) const {
    if (global >= module.rank()) throw Error(ErrorCode::InvalidArgument, "direct sum index out of range");
    auto it = std::upper_bound(offsets.begin(), offsets.end(), global);
    std::size_t k = static_cast<std::size_t>(it - offsets.begin()) - 1;
    return {k, global - offsets[k]};
}

DirectSum direct_sum(const GroundRing& ring, std::span<const FreeModule> summands,
                     std::span<const std::string> tags) {
    if (!tags.empty() && tags.size() != summands.size())
        throw Error(ErrorCode::InvalidArgument, "one tag per summand required");
    DirectSum out;
    out.offsets.push_back(0);
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < summands.size(); ++k) {
        if (summands[k].ring() != ring) throw Error(ErrorCode::RingMismatch, "summand over a different ring");
        const std::string tag = tags.empty() ? std::to_string(k) : tags[k];
        for (const auto& l : summands[k].labels()) labels.push_back(tag + "|" + l);
        out.offsets.push_back(out.offsets.back() + summands[k].rank());
    }
    out.module = FreeModule(ring, std::move(labels));
    return out;
}

}  // namespace catgr
