#pragma once

/**
 * @file ground.hpp
 * @brief Exact scalars, free modules and matrices over a configurable ground ring.
 *
 * Scalars are arbitrary-precision rationals. The ring decides which of them
 * are admissible: integers only for Z, everything for Q, and canonical
 * residues in [0, p) for GF(p). All arithmetic goes through the ring so that
 * results stay normalized.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catgr {

using Integer = boost::multiprecision::cpp_int;
using Scalar = boost::multiprecision::cpp_rational;

class GroundRing {
public:
    enum class Kind { Integers, Rationals, PrimeField };

    GroundRing() = default;

    static GroundRing integers() { return GroundRing(); }
    static GroundRing rationals();
    /// Throws InvalidArgument unless p is prime.
    static GroundRing prime_field(const Integer& p);
    /// Accepts "Z", "Q" and "GF(p)".
    static GroundRing from_name(std::string_view name);

    Kind kind() const noexcept { return kind_; }
    const Integer& characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ != Kind::Integers; }
    /// Q for Z, the ring itself otherwise.
    GroundRing fraction_field() const;
    std::string name() const;

    /// Maps an arbitrary rational into the ring; throws NotInRing when that is
    /// impossible (non-integer over Z, denominator divisible by p over GF(p)).
    Scalar normalize(const Scalar& v) const;
    bool contains(const Scalar& v) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;

    bool is_unit(const Scalar& a) const;
    std::optional<Scalar> inverse(const Scalar& a) const;

    /// Decimal "n" or "n/d"; throws ParseError on malformed text, NotInRing
    /// when the value has no image in the ring.
    Scalar parse(std::string_view text) const;
    std::string format(const Scalar& a) const;

    friend bool operator==(const GroundRing&, const GroundRing&) = default;

private:
    Kind kind_ = Kind::Integers;
    Integer p_ = 0;
};

using Vec = std::vector<Scalar>;

Vec zero_vector(std::size_t n);
Vec unit_vector(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
/// acc += c * v
void axpy(const GroundRing& ring, Vec& acc, const Scalar& c, const Vec& v);
Vec add(const GroundRing& ring, const Vec& a, const Vec& b);
Vec scale(const GroundRing& ring, const Scalar& c, const Vec& v);
std::string format_vector(const GroundRing& ring, const Vec& v);

/// Dense row-major matrix of scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& columns);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec column(std::size_t c) const;
    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Matrix multiply(const GroundRing& ring, const Matrix& a, const Matrix& b);
Matrix add(const GroundRing& ring, const Matrix& a, const Matrix& b);
Matrix scale(const GroundRing& ring, const Scalar& c, const Matrix& m);
/// acc += c * m
void axpy(const GroundRing& ring, Matrix& acc, const Scalar& c, const Matrix& m);
Vec apply(const GroundRing& ring, const Matrix& m, const Vec& v);
std::string format_matrix(const GroundRing& ring, const Matrix& m);

/// Rank over the fraction field of `ring`.
std::size_t rank(const GroundRing& ring, Matrix m);

struct Solution {
    Vec particular;       ///< free variables set to zero
    std::size_t nullity;  ///< dimension of the solution space of A x = 0
};

/// Solves A x = b over the fraction field of `ring`. Over Z the particular
/// solution may be non-integral; callers decide whether that matters.
std::optional<Solution> solve(const GroundRing& ring, const Matrix& a, const Vec& b);

/// Two-sided inverse in the ring, or nullopt (not square, or determinant not a unit).
std::optional<Matrix> inverse_matrix(const GroundRing& ring, const Matrix& m);

class FreeModule {
public:
    FreeModule() = default;
    /// Throws InvalidArgument on duplicate labels.
    FreeModule(GroundRing ring, std::vector<std::string> labels);
    static FreeModule of_rank(GroundRing ring, std::size_t n, const std::string& prefix = "b");

    const GroundRing& ring() const noexcept { return ring_; }
    std::size_t rank() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t k) const { return labels_.at(k); }
    std::optional<std::size_t> find(std::string_view label) const;

    friend bool operator==(const FreeModule&, const FreeModule&) = default;

private:
    GroundRing ring_;
    std::vector<std::string> labels_;
};

/// Module homomorphism; `matrix` is cod.rank() x dom.rank().
class LinearMap {
public:
    LinearMap() = default;
    /// Throws RingMismatch or DimensionMismatch on inconsistent data.
    LinearMap(FreeModule dom, FreeModule cod, Matrix matrix);

    const FreeModule& dom() const noexcept { return dom_; }
    const FreeModule& cod() const noexcept { return cod_; }
    const Matrix& matrix() const noexcept { return matrix_; }
    const GroundRing& ring() const noexcept { return dom_.ring(); }

    Vec operator()(const Vec& v) const { return apply(ring(), matrix_, v); }

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    FreeModule dom_;
    FreeModule cod_;
    Matrix matrix_;
};

LinearMap identity_map(const FreeModule& m);
LinearMap zero_map(const FreeModule& dom, const FreeModule& cod);
/// g ∘ f. Modules are matched by ring and rank; labels are descriptive only.
LinearMap compose_linear(const LinearMap& g, const LinearMap& f);
/// Throws NotSquare or NotInvertible.
LinearMap invert_linear(const LinearMap& f);

struct DirectSum {
    FreeModule module;
    std::vector<std::size_t> offsets;  ///< summand k occupies [offsets[k], offsets[k+1])

    std::size_t summand_count() const noexcept { return offsets.size() - 1; }
    std::size_t summand_rank(std::size_t k) const { return offsets.at(k + 1) - offsets.at(k); }
    std::size_t global_index(std::size_t summand, std::size_t local) const;
    std::pair<std::size_t, std::size_t> local_index(std::size_t global) const;
};

/// Concatenates summands in the given order. Labels become "tag|label";
/// tags default to the summand index.
DirectSum direct_sum(const GroundRing& ring, std::span<const FreeModule> summands,
                     std::span<const std::string> tags = {});

}  // namespace catgr
