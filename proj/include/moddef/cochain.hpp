#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "moddef/algebra.hpp"
#include "moddef/matrix.hpp"

namespace moddef {

/// A degree-n Hochschild cochain: a k-linear map R^{(x)n} -> End(M), stored
/// by its values on basis tuples. Tuples that are absent map to zero, and only
/// nonzero values are ever stored. Degree 0 has the single tuple ().
///
/// Flattened coordinate order: tuples lexicographically (first index most
/// significant), then matrix entries row-major.
class Cochain {
public:
    using Tuple = std::vector<std::size_t>;

    Cochain() = default;
    Cochain(Field field, std::size_t degree, std::size_t algebra_dim, std::size_t module_dim);
    static Cochain zero(const Module& m, std::size_t degree);
    /// Degree-0 cochain holding `value`.
    static Cochain constant(const Module& m, const Matrix& value);
    static Cochain unflatten(const Module& m, std::size_t degree, std::span<const Scalar> flat);

    const Field& field() const noexcept { return field_; }
    std::size_t degree() const noexcept { return degree_; }
    std::size_t algebra_dim() const noexcept { return algebra_dim_; }
    std::size_t module_dim() const noexcept { return module_dim_; }
    /// Number of flattened coordinates, d_R^n * d_M^2.
    std::size_t space_dim() const noexcept;

    /// The value on a basis tuple (zero if absent).
    const Matrix& at(const Tuple& t) const;
    /// Stores `value` (erasing the entry when it is zero). Throws InputError
    /// for a bad tuple or matrix shape.
    void set(const Tuple& t, Matrix value);
    /// at(t) += s * value
    void add(const Tuple& t, const Scalar& s, const Matrix& value);

    const std::map<Tuple, Matrix>& entries() const noexcept { return entries_; }
    bool is_zero() const noexcept { return entries_.empty(); }
    bool same_shape(const Cochain& other) const noexcept;

    Vector flatten() const;
    std::size_t tuple_index(const Tuple& t) const;

    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator-=(const Cochain& rhs);
    Cochain& operator*=(const Scalar& s);
    Cochain operator-() const;
    friend Cochain operator+(Cochain lhs, const Cochain& rhs) { return lhs += rhs; }
    friend Cochain operator-(Cochain lhs, const Cochain& rhs) { return lhs -= rhs; }
    friend bool operator==(const Cochain& lhs, const Cochain& rhs);

private:
    void check_tuple(const Tuple& t) const;

    Field field_;
    std::size_t degree_ = 0;
    std::size_t algebra_dim_ = 0;
    std::size_t module_dim_ = 0;
    Matrix zero_;
    std::map<Tuple, Matrix> entries_;
};

/// Calls `visit(tuple)` for every tuple in {0..dim-1}^arity in lexicographic order.
template <class Visit>
void for_each_tuple(std::size_t dim, std::size_t arity, Visit&& visit) {
    Cochain::Tuple t(arity, 0);
    if (dim == 0 && arity > 0) return;
    while (true) {
        visit(static_cast<const Cochain::Tuple&>(t));
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++t[pos] < dim) break;
            t[pos] = 0;
            if (pos == 0) return;
        }
        if (arity == 0) return;
    }
}

}  // namespace moddef
