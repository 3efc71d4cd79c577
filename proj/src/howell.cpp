#include "idlat/howell.hpp"

#include "idlat/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace idlat {

namespace modarith {

std::int64_t mul(std::int64_t a, std::int64_t b, std::int64_t n) {
    const auto r = static_cast<__int128>(a) * b % n;
    return static_cast<std::int64_t>(r < 0 ? r + n : r);
}

Xgcd xgcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b;
    std::int64_t old_s = 1, s = 0;
    std::int64_t old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

std::int64_t normalizing_unit(std::int64_t a, std::int64_t n) {
    a %= n;
    if (a < 0) {
        a += n;
    }
    if (a == 0) {
        return 1;
    }
    const Xgcd x = xgcd(a, n);
    const std::int64_t step = n / x.g;
    std::int64_t u = x.s % n;
    if (u < 0) {
        u += n;
    }
    // Every u + k*(n/g) still maps a to g; one of them is a unit.
    for (std::int64_t k = 0; k < x.g + 1; ++k) {
        if (std::gcd(u, n) == 1) {
            return u;
        }
        u = (u + step) % n;
    }
    throw Error("no normalizing unit found for " + std::to_string(a) + " mod " + std::to_string(n));
}

} // namespace modarith

namespace {

std::int64_t reduce_mod(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

// v <- v - q*w (mod n)
void axpy(Vec& v, std::int64_t q, const Vec& w, std::int64_t n) {
    q = reduce_mod(q, n);
    if (q == 0) {
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = reduce_mod(v[i] - modarith::mul(q, w[i], n), n);
    }
}

Vec scaled(const Vec& v, std::int64_t c, std::int64_t n) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[i] = modarith::mul(c, v[i], n);
    }
    return out;
}

std::size_t leading(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] != 0) {
            return i;
        }
    }
    return v.size();
}

} // namespace

Submodule::Submodule(std::int64_t modulus, std::size_t dim) : n_(modulus), dim_(dim) {
    if (modulus < 2) {
        throw ValidationError("submodule modulus must be at least 2");
    }
}

Submodule Submodule::full(std::int64_t modulus, std::size_t dim) {
    Submodule m(modulus, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        Vec e(dim, 0);
        e[i] = 1;
        m.rows_.push_back(std::move(e));
    }
    return m;
}

Submodule Submodule::span(std::int64_t modulus, std::size_t dim, std::span<const Vec> generators) {
    Submodule m(modulus, dim);
    for (const auto& g : generators) {
        m.insert(g);
    }
    return m;
}

std::vector<std::size_t> Submodule::pivots() const {
    std::vector<std::size_t> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) {
        out.push_back(leading(r));
    }
    return out;
}

std::size_t Submodule::row_at(std::size_t col) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = leading(rows_[i]);
        if (p == col) {
            return i;
        }
        if (p > col) {
            break;
        }
    }
    return rows_.size();
}

Vec Submodule::reduce(Vec v) const {
    for (const auto& row : rows_) {
        const std::size_t c = leading(row);
        const std::int64_t a = v[c];
        if (a % row[c] == 0) {
            axpy(v, a / row[c], row, n_);
        }
    }
    return v;
}

bool Submodule::contains(std::span<const std::int64_t> v) const {
    if (v.size() != dim_) {
        throw ValidationError("vector length does not match submodule dimension");
    }
    Vec w(v.begin(), v.end());
    for (auto& x : w) {
        x = reduce_mod(x, n_);
    }
    w = reduce(std::move(w));
    return leading(w) == dim_;
}

bool Submodule::contains(const Submodule& other) const {
    if (other.n_ != n_ || other.dim_ != dim_) {
        throw ValidationError("submodules live in different ambient modules");
    }
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vec& r) { return contains(r); });
}

std::uint64_t Submodule::order() const {
    std::uint64_t out = 1;
    for (const auto& r : rows_) {
        const auto factor = static_cast<std::uint64_t>(n_ / r[leading(r)]);
        if (__builtin_mul_overflow(out, factor, &out)) {
            throw BudgetError("submodule order exceeds 64 bits");
        }
    }
    return out;
}

bool Submodule::insert(std::span<const std::int64_t> input) {
    if (input.size() != dim_) {
        throw ValidationError("vector length does not match submodule dimension");
    }
    bool grew = false;
    std::deque<Vec> pending;
    Vec first(input.begin(), input.end());
    for (auto& x : first) {
        x = reduce_mod(x, n_);
    }
    pending.push_back(std::move(first));

    while (!pending.empty()) {
        Vec v = std::move(pending.front());
        pending.pop_front();
        for (std::size_t c = 0; c < dim_; ++c) {
            const std::int64_t a = v[c];
            if (a == 0) {
                continue;
            }
            const std::size_t idx = row_at(c);
            if (idx == rows_.size()) {
                const std::int64_t u = modarith::normalizing_unit(a, n_);
                v = scaled(v, u, n_);
                const std::int64_t g = v[c];
                auto pos = std::find_if(rows_.begin(), rows_.end(), [c](const Vec& r) { return leading(r) > c; });
                rows_.insert(pos, v);
                pending.push_back(scaled(v, n_ / g, n_));
                grew = true;
                break;
            }
            Vec& row = rows_[idx];
            const std::int64_t p = row[c];
            if (a % p == 0) {
                axpy(v, a / p, row, n_);
                continue;
            }
            const auto x = modarith::xgcd(p, a);
            const std::int64_t g = x.g;
            Vec combined(dim_);
            Vec rest(dim_);
            for (std::size_t i = 0; i < dim_; ++i) {
                combined[i] = reduce_mod(modarith::mul(x.s, row[i], n_) + modarith::mul(x.t, v[i], n_), n_);
                rest[i] = reduce_mod(modarith::mul(a / g, row[i], n_) - modarith::mul(p / g, v[i], n_), n_);
            }
            row = combined;
            pending.push_back(scaled(combined, n_ / g, n_));
            grew = true;
            v = std::move(rest);
        }
    }
    back_reduce();
    return grew;
}

void Submodule::back_reduce() {
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (std::size_t i = j + 1; i < rows_.size(); ++i) {
            const std::size_t c = leading(rows_[i]);
            const std::int64_t p = rows_[i][c];
            const std::int64_t q = rows_[j][c] / p;
            axpy(rows_[j], q, rows_[i], n_);
        }
    }
}

Submodule Submodule::operator+(const Submodule& other) const {
    if (other.n_ != n_ || other.dim_ != dim_) {
        throw ValidationError("submodules live in different ambient modules");
    }
    Submodule out = *this;
    for (const auto& r : other.rows_) {
        out.insert(r);
    }
    return out;
}

Submodule Submodule::intersect(const Submodule& other) const {
    if (other.n_ != n_ || other.dim_ != dim_) {
        throw ValidationError("submodules live in different ambient modules");
    }
    Submodule stacked(n_, 2 * dim_);
    for (const auto& a : rows_) {
        Vec r(a);
        r.insert(r.end(), a.begin(), a.end());
        stacked.insert(r);
    }
    for (const auto& b : other.rows_) {
        Vec r(b);
        r.resize(2 * dim_, 0);
        stacked.insert(r);
    }
    Submodule out(n_, dim_);
    for (const auto& r : stacked.rows_) {
        if (leading(r) >= dim_) {
            out.insert(Vec(r.begin() + static_cast<std::ptrdiff_t>(dim_), r.end()));
        }
    }
    return out;
}

std::vector<Vec> Submodule::elements(std::uint64_t limit) const {
    const std::uint64_t count = order();
    if (count > limit) {
        throw BudgetError("submodule has " + std::to_string(count) + " elements, above the limit " +
                          std::to_string(limit));
    }
    std::vector<Vec> out;
    out.reserve(count);
    std::vector<std::int64_t> coeff(rows_.size(), 0);
    for (std::uint64_t k = 0; k < count; ++k) {
        Vec v(dim_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            axpy(v, -coeff[i], rows_[i], n_);
        }
        out.push_back(std::move(v));
        for (std::size_t i = rows_.size(); i-- > 0;) {
            const std::int64_t bound = n_ / rows_[i][leading(rows_[i])];
            if (++coeff[i] < bound) {
                break;
            }
            coeff[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering Submodule::operator<=>(const Submodule& other) const {
    if (auto c = n_ <=> other.n_; c != 0) {
        return c;
    }
    if (auto c = dim_ <=> other.dim_; c != 0) {
        return c;
    }
    return rows_ <=> other.rows_;
}

Vec LinearMap::apply(std::span<const std::int64_t> v) const {
    if (v.size() != domain_dim) {
        throw ValidationError("vector length does not match map domain");
    }
    Vec out(codomain_dim, 0);
    for (std::size_t i = 0; i < domain_dim; ++i) {
        axpy(out, -v[i], images[i], modulus);
    }
    return out;
}

Submodule LinearMap::kernel() const {
    Submodule graph(modulus, codomain_dim + domain_dim);
    for (std::size_t i = 0; i < domain_dim; ++i) {
        Vec r = images[i];
        r.resize(codomain_dim + domain_dim, 0);
        r[codomain_dim + i] = 1;
        graph.insert(r);
    }
    Submodule out(modulus, domain_dim);
    for (const auto& r : graph.rows()) {
        if (leading(r) >= codomain_dim) {
            out.insert(Vec(r.begin() + static_cast<std::ptrdiff_t>(codomain_dim), r.end()));
        }
    }
    return out;
}

Submodule LinearMap::image() const { return Submodule::span(modulus, codomain_dim, images); }

} // namespace idlat
