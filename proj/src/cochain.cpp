#include "moddef/cochain.hpp"

#include <stdexcept>

#include "moddef/errors.hpp"

namespace moddef {

Cochain::Cochain(Field field, std::size_t degree, std::size_t algebra_dim, std::size_t module_dim)
    : field_(field),
      degree_(degree),
      algebra_dim_(algebra_dim),
      module_dim_(module_dim),
      zero_(field, module_dim, module_dim) {}

Cochain Cochain::zero(const Module& m, std::size_t degree) {
    return Cochain(m.field(), degree, m.algebra().dim(), m.dim());
}

Cochain Cochain::constant(const Module& m, const Matrix& value) {
    Cochain c = zero(m, 0);
    c.set({}, value);
    return c;
}

std::size_t Cochain::space_dim() const noexcept {
    std::size_t n = module_dim_ * module_dim_;
    for (std::size_t i = 0; i < degree_; ++i) n *= algebra_dim_;
    return n;
}

void Cochain::check_tuple(const Tuple& t) const {
    if (t.size() != degree_)
        throw InputError("tuple of arity " + std::to_string(t.size()) + " in a degree-" + std::to_string(degree_) +
                         " cochain");
    for (auto a : t)
        if (a >= algebra_dim_)
            throw InputError("basis index " + std::to_string(a) + " out of range for algebra of dimension " +
                             std::to_string(algebra_dim_));
}

const Matrix& Cochain::at(const Tuple& t) const {
    auto it = entries_.find(t);
    return it == entries_.end() ? zero_ : it->second;
}

void Cochain::set(const Tuple& t, Matrix value) {
    check_tuple(t);
    if (value.rows() != module_dim_ || value.cols() != module_dim_ || value.field() != field_)
        throw InputError("cochain values must be " + std::to_string(module_dim_) + "x" + std::to_string(module_dim_) +
                         " matrices over " + field_.name());
    if (value.is_zero())
        entries_.erase(t);
    else
        entries_.insert_or_assign(t, std::move(value));
}

void Cochain::add(const Tuple& t, const Scalar& s, const Matrix& value) {
    if (s.is_zero() || value.is_zero()) return;
    auto it = entries_.find(t);
    if (it == entries_.end()) {
        set(t, s.is_one() ? value : value * s);
        return;
    }
    it->second.add_scaled(s, value);
    if (it->second.is_zero()) entries_.erase(it);
}

bool Cochain::same_shape(const Cochain& other) const noexcept {
    return field_ == other.field_ && degree_ == other.degree_ && algebra_dim_ == other.algebra_dim_ &&
           module_dim_ == other.module_dim_;
}

std::size_t Cochain::tuple_index(const Tuple& t) const {
    std::size_t index = 0;
    for (auto a : t) index = index * algebra_dim_ + a;
    return index;
}

Vector Cochain::flatten() const {
    const std::size_t block = module_dim_ * module_dim_;
    Vector flat(space_dim(), field_.zero());
    for (const auto& [t, value] : entries_) {
        std::size_t base = tuple_index(t) * block;
        for (std::size_t i = 0; i < block; ++i) flat[base + i] = value.entries()[i];
    }
    return flat;
}

Cochain Cochain::unflatten(const Module& m, std::size_t degree, std::span<const Scalar> flat) {
    Cochain c = zero(m, degree);
    if (flat.size() != c.space_dim())
        throw InputError("flattened cochain has " + std::to_string(flat.size()) + " coordinates, expected " +
                         std::to_string(c.space_dim()));
    const std::size_t d = m.dim();
    std::size_t base = 0;
    for_each_tuple(m.algebra().dim(), degree, [&](const Tuple& t) {
        Matrix value(m.field(), d, d);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t col = 0; col < d; ++col) value(r, col) = flat[base + r * d + col];
        base += d * d;
        c.set(t, std::move(value));
    });
    return c;
}

Cochain& Cochain::operator+=(const Cochain& rhs) {
    if (!same_shape(rhs)) throw std::invalid_argument("cochain shape mismatch in +");
    for (const auto& [t, value] : rhs.entries_) add(t, field_.one(), value);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs) {
    if (!same_shape(rhs)) throw std::invalid_argument("cochain shape mismatch in -");
    auto minus_one = -field_.one();
    for (const auto& [t, value] : rhs.entries_) add(t, minus_one, value);
    return *this;
}

Cochain& Cochain::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [t, value] : entries_) value *= s;
    return *this;
}

Cochain Cochain::operator-() const {
    Cochain c = *this;
    for (auto& [t, value] : c.entries_) value = -value;
    return c;
}

bool operator==(const Cochain& lhs, const Cochain& rhs) {
    return lhs.same_shape(rhs) && lhs.entries_ == rhs.entries_;
}

}  // namespace moddef
