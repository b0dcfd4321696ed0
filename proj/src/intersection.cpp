#include "toric_volume/intersection.hpp"

#include "toric_volume/errors.hpp"

#include <string>
#include <utility>

namespace toric {

IntersectionMatrix::IntersectionMatrix(std::size_t n)
    : n_(n)
    , entries_((n + 2) * (n + 2))
{
}

std::size_t IntersectionMatrix::index(std::size_t i, std::size_t j) const
{
    if (i >= dim() || j >= dim())
        throw DomainError("intersection index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    return i * dim() + j;
}

bool IntersectionMatrix::defined(std::size_t i, std::size_t j) const
{
    return entries_[index(i, j)].has_value();
}

const std::optional<Rational>& IntersectionMatrix::entry(std::size_t i, std::size_t j) const
{
    return entries_[index(i, j)];
}

const Rational& IntersectionMatrix::at(std::size_t i, std::size_t j) const
{
    const auto& e = entries_[index(i, j)];
    if (!e)
        throw DomainError("C_" + std::to_string(i) + " . C_" + std::to_string(j) + " is undefined");
    return *e;
}

void IntersectionMatrix::set(std::size_t i, std::size_t j, Rational value)
{
    entries_[index(i, j)] = value;
    entries_[index(j, i)] = std::move(value);
}

IntersectionMatrix IntersectionMatrix::with_entry(std::size_t i, std::size_t j, Rational value) const
{
    IntersectionMatrix copy = *this;
    copy.set(i, j, std::move(value));
    return copy;
}

Rational adjacent_intersection(const WeightSequence& ws, std::size_t k)
{
    if (k < 1 || k > ws.size() + 1)
        throw DomainError("adjacent_intersection: k = " + std::to_string(k) + " outside 1.." + std::to_string(ws.size() + 1));
    return make_rational(1, cross(ws.ray(k - 1), ws.ray(k)));
}

Rational self_intersection(const WeightSequence& ws, std::size_t k)
{
    if (k < 1 || k > ws.size())
        throw DomainError("self_intersection: k = " + std::to_string(k) + " outside 1.." + std::to_string(ws.size()));
    const auto prev = ws.ray(k - 1);
    const auto cur = ws.ray(k);
    const auto next = ws.ray(k + 1);
    return make_rational(-cross(prev, next), cross(prev, cur) * cross(cur, next));
}

IntersectionMatrix intersection_matrix(const WeightSequence& ws, const std::optional<GermParams>& germ)
{
    const std::size_t n = ws.size();
    if (n == 0)
        throw DomainError("intersection_matrix: need at least one inserted ray");
    IntersectionMatrix m(n);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = i + 2; j < m.dim(); ++j)
            m.set(i, j, Rational(0));
    for (std::size_t k = 1; k <= n + 1; ++k)
        m.set(k - 1, k, adjacent_intersection(ws, k));
    for (std::size_t k = 1; k <= n; ++k)
        m.set(k, k, self_intersection(ws, k));
    if (germ) {
        Rational c0_sq = germ->b1_sq - make_rational(ws.p(1), ws.q(1));
        m.set(0, 0, c0_sq);
        m.b1_sq_ = germ->b1_sq;
    }
    return m;
}

bool verify_linear_relations(const IntersectionMatrix& m, const WeightSequence& ws)
{
    const std::size_t n = ws.size();
    if (m.n() != n)
        return false;
    const std::size_t dim = m.dim();

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (m.entry(i, j) != m.entry(j, i))
                return false;

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 2; j < dim; ++j)
            if (!m.defined(i, j) || m.at(i, j) != 0)
                return false;

    for (std::size_t k = 1; k <= n; ++k) {
        Rational sum_p = 0;
        Rational sum_q = 0;
        for (std::size_t j = 0; j < dim; ++j) {
            if (!m.defined(k, j))
                return false;
            const auto u = ws.ray(j);
            sum_p += m.at(k, j) * u.p;
            sum_q += m.at(k, j) * u.q;
        }
        if (sum_p != 0 || sum_q != 0)
            return false;
    }

    if (m.defined(0, 0)) {
        if (!m.b1_sq())
            return false;
        if (m.at(0, 0) + Rational(ws.p(1)) * m.at(0, 1) != *m.b1_sq())
            return false;
    }
    return true;
}

std::vector<Integer> pullback_b1(const WeightSequence& ws)
{
    std::vector<Integer> coeffs;
    coeffs.reserve(ws.size() + 2);
    coeffs.emplace_back(1);
    for (const auto& v : ws.pairs())
        coeffs.push_back(v.p);
    coeffs.emplace_back(0);
    return coeffs;
}

} // namespace toric
