#include "lhuilier/basis.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace lhuilier {

std::string BasisElement::str() const { return std::to_string(level) + ":" + std::to_string(index); }

void BasisVector::add(const BasisElement& b, std::int64_t coef) {
    if (coef == 0) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, coef);
        return;
    }
    it->second = checked_add(it->second, coef);
    if (it->second == 0) terms_.erase(it);
}

BasisVector& BasisVector::operator+=(const BasisVector& o) {
    if (level_ == 0) level_ = o.level_;
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

BasisVector& BasisVector::operator-=(const BasisVector& o) {
    if (level_ == 0) level_ = o.level_;
    for (const auto& [b, c] : o.terms_) add(b, checked_sub(0, c));
    return *this;
}

BasisVector& BasisVector::operator*=(std::int64_t k) {
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_) c = checked_mul(c, k);
    return *this;
}

std::int64_t BasisVector::multiplicity(const BasisElement& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? 0 : it->second;
}

std::set<BasisElement> BasisVector::support() const {
    std::set<BasisElement> s;
    for (const auto& [b, c] : terms_) s.insert(b);
    return s;
}

std::int64_t BasisVector::deg_level(std::int64_t d) const {
    std::int64_t sum = 0;
    for (const auto& [b, c] : terms_)
        if (b.level == d) sum = checked_add(sum, c);
    return sum;
}

BasisVector BasisVector::restrict_to_level(std::int64_t d) const {
    BasisVector r(level_);
    for (const auto& [b, c] : terms_)
        if (b.level == d) r.add(b, c);
    return r;
}

std::string BasisVector::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [b, c] : terms_) {
        if (!s.empty()) s += " ";
        s += b.str() + "^" + std::to_string(c);
    }
    return s;
}

BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }
BasisVector operator*(std::int64_t k, BasisVector v) { return v *= k; }

namespace {

bool squarefree_case_member(const ResidueForm& rf, std::size_t start, bool parity_even) {
    int first_free = -1;
    for (std::size_t s = start; s < rf.components.size(); ++s) {
        const auto& c = rf.components[s];
        if (c.bar < 1 || c.bar > c.p - 2) return false;
        if (c.bar != 1 && first_free < 0) first_free = static_cast<int>(s);
    }
    if (first_free < 0) return parity_even;
    const auto& c = rf.components[static_cast<std::size_t>(first_free)];
    return c.bar >= (c.p + 1) / 2;
}

}  // namespace

bool in_relative_basis(std::int64_t d, std::int64_t a) {
    if (d < 2) return false;
    a = mod_floor(a, d);
    if (a == 0 || gcd64(a, d) != 1) return false;
    if (d == 2) return a == 1;
    if (d == 4) return false;
    auto fac = factorize(d);
    if (fac.size() == 1 && fac[0].e == 1) return a <= (d - 1) / 2;
    if (d % 2 == 0 && d % 4 != 0) return false;

    bool odd = d % 2 == 1;
    bool tail_squarefree = true;
    for (std::size_t i = odd ? 0 : 1; i < fac.size(); ++i)
        if (fac[i].e != 1) tail_squarefree = false;
    bool even_parity = fac.size() % 2 == 0;
    auto rf = residue_form(d, a);

    if (odd && tail_squarefree) return squarefree_case_member(rf, 0, even_parity);
    if (!odd && fac[0].e == 2 && tail_squarefree) {
        if (rf.components[0].bar != 0 || rf.components[0].hat != 1) return false;
        return squarefree_case_member(rf, 1, even_parity);
    }

    std::size_t mu = 0;
    if (d % 8 != 0) {
        for (std::size_t i = 0; i < fac.size(); ++i) {
            if (fac[i].p != 2 && fac[i].e >= 2) {
                mu = i;
                break;
            }
        }
    }
    for (const auto& c : rf.components) {
        if (c.e == 1) {
            if (c.bar < 1 || c.bar > c.p - 2) return false;
        } else {
            if (c.bar > c.p - 2) return false;
            if (c.hat < 1 || c.hat >= ipow(c.p, c.e - 1)) return false;
        }
    }
    const auto& cm = rf.components[mu];
    return 2 * cm.hat < ipow(cm.p, cm.e - 1);
}

std::vector<BasisElement> relative_basis(std::int64_t d) {
    std::vector<BasisElement> out;
    for (std::int64_t a = 1; a < d; ++a)
        if (in_relative_basis(d, a)) out.push_back({d, a});
    return out;
}

std::vector<BasisElement> conrad_basis(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("conrad_basis: level must be at least 2");
    bool four = n % 4 == 0;
    std::vector<BasisElement> out;
    for (std::int64_t d : divisors(n)) {
        if (d < 2) continue;
        if (four && d == 2) continue;
        if (four && d == 4) {
            out.push_back({4, 1});
            continue;
        }
        auto b = relative_basis(d);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

int Presentation::position(const BasisElement& b) const {
    auto it = position_.find(b);
    return it == position_.end() ? -1 : it->second;
}

namespace {

std::int64_t fold(std::int64_t a, std::int64_t n) {
    std::int64_t r = mod_floor(a, n);
    return std::min(r, n - r);
}

constexpr std::uint64_t kPrime = 2147483647ULL;

std::uint64_t to_field(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(kPrime);
    if (r < 0) r += static_cast<std::int64_t>(kPrime);
    return static_cast<std::uint64_t>(r);
}

std::uint64_t field_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

std::uint64_t field_inv(std::uint64_t v) { return field_pow(v, kPrime - 2); }

std::int64_t lift_signed(std::uint64_t v) {
    return v <= kPrime / 2 ? static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v) - static_cast<std::int64_t>(kPrime);
}

}  // namespace

const std::vector<std::pair<int, std::int64_t>>& Presentation::coordinates(std::int64_t a) const {
    std::int64_t g = fold(a, level_);
    if (g == 0) throw std::invalid_argument("coordinates: level divides the index");
    return coords_[static_cast<std::size_t>(g - 1)];
}

void Presentation::accumulate(std::int64_t a, std::int64_t coef, std::vector<std::int64_t>& dense) const {
    for (const auto& [pos, c] : coordinates(a)) dense[static_cast<std::size_t>(pos)] += coef * c;
}

BasisVector Presentation::represent(std::int64_t a) const {
    BasisVector v(level_);
    for (const auto& [pos, c] : coordinates(a)) v.add(basis_[static_cast<std::size_t>(pos)], c);
    return v;
}

BasisVector Presentation::from_dense(const std::vector<std::int64_t>& dense) const {
    BasisVector v(level_);
    for (std::size_t i = 0; i < dense.size(); ++i) v.add(basis_[i], dense[i]);
    return v;
}

Presentation build_presentation(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("build_presentation: level must be at least 2");
    Presentation P;
    P.level_ = n;
    P.basis_ = conrad_basis(n);
    const std::size_t G = static_cast<std::size_t>(n / 2);
    const std::size_t B = P.basis_.size();

    std::vector<int> basis_of_gen(G + 1, -1);
    for (std::size_t i = 0; i < B; ++i) {
        const auto& b = P.basis_[i];
        P.position_[b] = static_cast<int>(i);
        auto g = static_cast<std::size_t>(fold((n / b.level) * b.index, n));
        if (basis_of_gen[g] >= 0) throw std::logic_error("build_presentation: two basis elements coincide at level " + std::to_string(n));
        basis_of_gen[g] = static_cast<int>(i);
    }
    if (G < B) throw std::logic_error("build_presentation: more basis elements than generators");

    // Columns: non-basis generators first, basis generators last.
    std::vector<std::size_t> col_of_gen(G + 1);
    std::vector<std::size_t> gen_of_col(G);
    {
        std::size_t next = 0;
        for (std::size_t g = 1; g <= G; ++g)
            if (basis_of_gen[g] < 0) {
                col_of_gen[g] = next;
                gen_of_col[next++] = g;
            }
        for (std::size_t i = 0; i < B; ++i) {
            auto g = static_cast<std::size_t>(fold((n / P.basis_[i].level) * P.basis_[i].index, n));
            col_of_gen[g] = G - B + i;
            gen_of_col[G - B + i] = g;
        }
    }
    const std::size_t NB = G - B;

    // Distribution relations v(m,b) = prod_j v(n, b + m j), with v(m,b) = v(n, (n/m) b).
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> relations;
    for (std::int64_t m : divisors(n)) {
        if (m < 2 || m == n) continue;
        std::int64_t k = n / m;
        for (std::int64_t b = 1; b < m; ++b) {
            std::map<std::size_t, std::int64_t> row;
            row[static_cast<std::size_t>(fold(k * b, n))] += 1;
            for (std::int64_t j = 0; j < k; ++j) row[static_cast<std::size_t>(fold(b + m * j, n))] -= 1;
            std::vector<std::pair<std::size_t, std::int64_t>> sparse;
            for (const auto& [g, c] : row)
                if (c != 0) sparse.emplace_back(g, c);
            if (!sparse.empty()) relations.push_back(std::move(sparse));
        }
    }
    P.relation_count_ = relations.size();

    const std::size_t R = relations.size();
    std::vector<std::uint64_t> M(R * G, 0);
    for (std::size_t r = 0; r < R; ++r)
        for (const auto& [g, c] : relations[r]) M[r * G + col_of_gen[g]] = to_field(c);

    std::vector<std::size_t> pivot_row_of_col(NB, R);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < NB && rank < R; ++col) {
        std::size_t piv = R;
        for (std::size_t r = rank; r < R; ++r)
            if (M[r * G + col] != 0) {
                piv = r;
                break;
            }
        if (piv == R) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < G; ++c) std::swap(M[piv * G + c], M[rank * G + c]);
        std::uint64_t inv = field_inv(M[rank * G + col]);
        for (std::size_t c = col; c < G; ++c) M[rank * G + c] = M[rank * G + c] * inv % kPrime;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank) continue;
            std::uint64_t f = M[r * G + col];
            if (f == 0) continue;
            std::uint64_t neg = kPrime - f;
            for (std::size_t c = col; c < G; ++c) {
                std::uint64_t v = M[rank * G + c];
                if (v) M[r * G + c] = (M[r * G + c] + neg * v) % kPrime;
            }
        }
        pivot_row_of_col[col] = rank;
        ++rank;
    }
    for (std::size_t r = rank; r < R; ++r)
        for (std::size_t c = NB; c < G; ++c)
            if (M[r * G + c] != 0)
                throw std::logic_error("build_presentation: Conrad basis is dependent at level " + std::to_string(n));
    P.relation_rank_ = rank;
    if (rank != NB)
        throw std::logic_error("build_presentation: relation rank " + std::to_string(rank) + " does not match " +
                               std::to_string(NB) + " at level " + std::to_string(n));

    P.coords_.assign(G, {});
    for (std::size_t i = 0; i < B; ++i) {
        auto g = gen_of_col[NB + i];
        P.coords_[g - 1] = {{static_cast<int>(i), 1}};
    }
    for (std::size_t col = 0; col < NB; ++col) {
        std::size_t r = pivot_row_of_col[col];
        std::vector<std::pair<int, std::int64_t>> coords;
        for (std::size_t i = 0; i < B; ++i) {
            std::uint64_t v = M[r * G + NB + i];
            if (v != 0) coords.emplace_back(static_cast<int>(i), -lift_signed(v));
        }
        P.coords_[gen_of_col[col] - 1] = std::move(coords);
    }

    // Exact check of every relation with the integer coordinates.
    std::vector<std::int64_t> acc(B);
    for (const auto& row : relations) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& [g, c] : row)
            for (const auto& [pos, e] : P.coords_[g - 1])
                acc[static_cast<std::size_t>(pos)] = checked_add(acc[static_cast<std::size_t>(pos)], checked_mul(c, e));
        for (auto v : acc)
            if (v != 0) throw std::logic_error("build_presentation: integer coordinates fail a relation at level " + std::to_string(n));
    }
    return P;
}

const Presentation& presentation(std::int64_t n) {
    static std::mutex mu;
    static std::map<std::int64_t, std::unique_ptr<Presentation>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<Presentation>(build_presentation(n));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(built));
    return *it->second;
}

BasisVector represent(std::int64_t n, std::int64_t a) {
    if (n < 2) throw std::invalid_argument("represent: level must be at least 2");
    if (mod_floor(a, n) == 0) throw std::invalid_argument("represent: level divides the index");
    return presentation(n).represent(a);
}

BasisVector lift(const BasisVector& v, std::int64_t n) {
    if (v.level() != 0 && n % v.level() != 0) throw std::invalid_argument("lift: target level is not a multiple");
    BasisVector out(n);
    for (const auto& [b, c] : v.terms()) {
        if (n % b.level != 0) throw std::invalid_argument("lift: basis element level does not divide the target");
        auto r = represent(n, (n / b.level) * b.index);
        r *= c;
        out += r;
    }
    return out;
}

BigFloat numeric_log_magnitude(const BasisVector& v, mpfr_prec_t precision_bits) {
    BigFloat sum(precision_bits);
    for (const auto& [b, c] : v.terms()) {
        auto term = BigFloat::chord(b.index, b.level, precision_bits).log();
        term.mul_si(static_cast<long>(c));
        sum += term;
    }
    return sum;
}

BigFloat numeric_magnitude(const BasisVector& v, mpfr_prec_t precision_bits) {
    return numeric_log_magnitude(v, precision_bits).exp();
}

}  // namespace lhuilier
