#include <array>
#include <cmath>
#include <cstdint>

#include "nilcx/error.hpp"
#include "nilcx/families.hpp"

namespace nilcx {

namespace {

constexpr std::size_t kDim = 8;
using Table = std::array<double, kDim * kDim * kDim>;

double to_double(const Scalar& s) { return s.raw().get_d(); }

struct Candidate {
    CScalar value;
    double re, im;
};

// Nonzero values with real and imaginary parts in {0, +-1, +-2, +-1/2}, simplest first.
std::vector<Candidate> value_list(bool real_only) {
    const std::array<Scalar, 7> parts = {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2),
                                         Scalar(-1, 2)};
    const auto height = [](std::size_t k) { return k == 0 ? 0 : (k <= 2 ? 1 : 3); };
    std::vector<std::pair<int, Candidate>> ranked;
    for (std::size_t a = 0; a < parts.size(); ++a) {
        for (std::size_t b = 0; b < parts.size(); ++b) {
            if (a == 0 && b == 0) continue;
            if (real_only && b != 0) continue;
            CScalar z(parts[a], parts[b]);
            ranked.push_back({height(a) + height(b), {z, to_double(parts[a]), to_double(parts[b])}});
        }
    }
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<Candidate> out;
    for (auto& r : ranked) out.push_back(std::move(r.second));
    return out;
}

/// Realified structure constants as a real-linear function of the parameters.
struct LinearModel {
    std::vector<std::string> symbols;
    std::vector<Table> re_part;  // per symbol, the constants of value 1
    std::vector<Table> im_part;  // per symbol, the constants of value i (unused for real symbols)
};

Table constants_of(const FamilyParams& p) {
    const Realification r = realify(family_instantiate(p), pairing_dim8_reference());
    Table t{};
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = 0; j < kDim; ++j) {
            for (std::size_t k = 0; k < kDim; ++k) t[(i * kDim + j) * kDim + k] = to_double(r.algebra.constant(i, j, k));
        }
    }
    return t;
}

LinearModel build_model(Family family, const std::vector<std::string>& symbols) {
    LinearModel m;
    m.symbols = symbols;
    for (const auto& sym : symbols) {
        m.re_part.push_back(constants_of(FamilyParams(family).set(sym, CScalar(1))));
        m.im_part.push_back(is_real_symbol(sym) ? Table{} : constants_of(FamilyParams(family).set(sym, CScalar::i())));
    }
    return m;
}

// Values are dyadic rationals of small height, so this floating-point test is exact
// in practice; every survivor is re-checked with rational arithmetic anyway.
bool jacobi_holds(const Table& c) {
    const auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * kDim + j) * kDim + k]; };
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t j = i + 1; j < kDim; ++j) {
            for (std::size_t k = j + 1; k < kDim; ++k) {
                for (std::size_t l = 0; l < kDim; ++l) {
                    double sum = 0;
                    for (std::size_t m = 0; m < kDim; ++m) {
                        sum += at(i, j, m) * at(m, k, l) + at(j, k, m) * at(m, i, l) + at(k, i, m) * at(m, j, l);
                    }
                    if (std::abs(sum) > 1e-9) return false;
                }
            }
        }
    }
    return true;
}

// Upper bound on dim of the center: 8 - rank of x -> ([x, e_j])_j, with the rank taken
// modulo a prime (never larger than the rational rank). Constants are scaled to integers.
std::size_t center_dim_bound(const Table& c) {
    constexpr std::int64_t prime = 2147483647;
    std::array<std::array<std::int64_t, kDim * kDim>, kDim> rows{};
    for (std::size_t i = 0; i < kDim; ++i) {
        for (std::size_t jk = 0; jk < kDim * kDim; ++jk) {
            const double scaled = c[i * kDim * kDim + jk] * 8;
            if (scaled != std::floor(scaled)) return kDim;
            rows[i][jk] = ((static_cast<std::int64_t>(scaled) % prime) + prime) % prime;
        }
    }
    const auto inverse = [&](std::int64_t a) {
        std::int64_t result = 1, e = prime - 2;
        while (e > 0) {
            if (e & 1) result = result * a % prime;
            a = a * a % prime;
            e >>= 1;
        }
        return result;
    };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < kDim * kDim && rank < kDim; ++col) {
        std::size_t pivot = rank;
        while (pivot < kDim && rows[pivot][col] == 0) ++pivot;
        if (pivot == kDim) continue;
        std::swap(rows[pivot], rows[rank]);
        const std::int64_t inv = inverse(rows[rank][col]);
        for (std::size_t r = rank + 1; r < kDim; ++r) {
            if (rows[r][col] == 0) continue;
            const std::int64_t f = rows[r][col] * inv % prime;
            for (std::size_t k = col; k < kDim * kDim; ++k) {
                rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % prime + prime) % prime;
            }
        }
        ++rank;
    }
    return kDim - rank;
}

}  // namespace

std::optional<SearchHit> search_case(const FamilyCase& target, const SearchOptions& options,
                                     const std::function<void(std::size_t)>& progress) {
    std::vector<std::string> free;
    for (const auto& sym : family_symbols(target.family)) {
        if (std::find(target.zero.begin(), target.zero.end(), sym) == target.zero.end()) free.push_back(sym);
    }
    const LinearModel model = build_model(target.family, free);

    using R = RealPartCondition;
    const bool l_imaginary = target.real_part == R::ReLZero || target.real_part == R::ReAReLZero;
    const bool a_imaginary = target.real_part == R::ReAReLZero;
    std::vector<std::vector<Candidate>> values(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        values[k] = value_list(is_real_symbol(free[k]));
        const bool imaginary = (free[k] == "L" && l_imaginary) || (free[k] == "A" && a_imaginary);
        if (imaginary) std::erase_if(values[k], [](const Candidate& c) { return c.re != 0; });
    }

    std::size_t tried = 0;
    const std::size_t n = free.size();
    const auto& schedule = options.schedule;

    for (std::size_t stage = 0; stage < schedule.size(); ++stage) {
        const std::size_t limit = schedule[stage].value_limit;
        for (std::size_t support = 1; support <= std::min(schedule[stage].max_support, n); ++support) {
            // Enumerate subsets of size `support` in lexicographic order.
            std::vector<std::size_t> subset(support);
            for (std::size_t k = 0; k < support; ++k) subset[k] = k;
            while (true) {
                std::vector<std::size_t> bound(support);
                for (std::size_t k = 0; k < support; ++k) bound[k] = std::min(limit, values[subset[k]].size());
                std::vector<std::size_t> choice(support, 0);
                bool tuples_left = std::all_of(bound.begin(), bound.end(), [](std::size_t b) { return b > 0; });
                while (tuples_left) {
                    // Skip tuples an earlier stage already visited.
                    const std::size_t largest = *std::max_element(choice.begin(), choice.end());
                    bool admissible = std::none_of(schedule.begin(), schedule.begin() + stage, [&](const SearchStage& s) {
                        return support <= s.max_support && largest < s.value_limit;
                    });
                    if (admissible && (target.real_part == R::ReLNonzero || target.real_part == R::ReAReLNotBothZero)) {
                        bool re_nonzero = false;
                        for (std::size_t k = 0; k < support; ++k) {
                            const std::string& sym = free[subset[k]];
                            const bool counts = sym == "L" || (sym == "A" && target.real_part == R::ReAReLNotBothZero);
                            if (counts && values[subset[k]][choice[k]].re != 0) re_nonzero = true;
                        }
                        admissible = re_nonzero;
                    }
                    if (admissible) {
                        ++tried;
                        if (progress && tried % 1000000 == 0) progress(tried);
                        if (options.max_candidates != 0 && tried > options.max_candidates) return std::nullopt;
                        Table c{};
                        for (std::size_t k = 0; k < support; ++k) {
                            const Candidate& v = values[subset[k]][choice[k]];
                            const Table& re = model.re_part[subset[k]];
                            const Table& im = model.im_part[subset[k]];
                            for (std::size_t e = 0; e < c.size(); ++e) c[e] += v.re * re[e] + v.im * im[e];
                        }
                        if (center_dim_bound(c) <= 1 && jacobi_holds(c)) {
                            FamilyParams p(target.family);
                            for (std::size_t k = 0; k < support; ++k) p.set(free[subset[k]], values[subset[k]][choice[k]].value);
                            const ComplexEquations eqs = family_instantiate(p);
                            if (is_lie_algebra(realify(eqs, pairing_dim8_reference()).algebra)) {
                                CaseReport report = family_case_check(p, eqs);
                                if (report.ok() && report.type == target.type &&
                                    report.kind == JKind::StronglyNonNilpotent && report.center_dim == 1 &&
                                    target.conditions_hold(p)) {
                                    return SearchHit{target, std::move(p), std::move(report), tried};
                                }
                            }
                        }
                    }
                    // Odometer increment.
                    std::size_t k = 0;
                    while (k < support && ++choice[k] == bound[k]) choice[k++] = 0;
                    tuples_left = k < support;
                }
                // Next subset.
                std::size_t k = support;
                while (k > 0 && subset[k - 1] == n - support + k - 1) --k;
                if (k == 0) break;
                ++subset[k - 1];
                for (std::size_t m = k; m < support; ++m) subset[m] = subset[m - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace nilcx
