#include "pureshape/table.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "pureshape/errors.hpp"

namespace pureshape {
namespace {

constexpr int kMaxTableDegree = 60;
constexpr Int kSearchBudget = 1'000'000;
constexpr int kExtraRepresentatives = 3;

// Smallest positive hypothesis-satisfying member of the class c mod m.
std::optional<Int> h_representative(Int c, Int m, int n, Int start_multiple = 0) {
    Int a = mod_canonical(c, m) + start_multiple * m;
    if (a == 0) a = m;
    for (Int steps = 0; steps < kSearchBudget / m + 64; ++steps, a += m)
        if (hypothesis_H(a, n)) return a;
    return std::nullopt;
}

// First invariant that distinguishes two locals at the same prime.
std::string first_difference(const LocalShape& x, const LocalShape& y) {
    if ((x.v_a == 0) != (y.v_a == 0)) return "ramified/unit branch";
    if (x.d != y.d) return "d";
    for (std::size_t m = 0; m < std::min(x.k.size(), y.k.size()); ++m)
        if (x.k[m] != y.k[m]) {
            std::ostringstream os;
            os << "k[" << m + 1 << "]";
            return os.str();
        }
    if (x.k.size() != y.k.size()) return "k length";
    return "beta";
}

std::optional<std::pair<Int, std::string>> global_difference(const GlobalShape& x, const GlobalShape& y) {
    if (x.n != y.n || x.locals.size() != y.locals.size())
        return std::make_pair<Int, std::string>(0, "degree");
    for (std::size_t i = 0; i < x.locals.size(); ++i)
        if (!shape_equal(x.locals[i], y.locals[i]))
            return std::make_pair(x.locals[i].p, first_difference(x.locals[i], y.locals[i]));
    return std::nullopt;
}

struct LocalEntry {
    TableStatus status;
    LocalShape shape;
    std::string reason;
};

std::vector<LocalEntry> local_table(int n, Int p, int e) {
    Int P = ipow(p, e + 1);
    std::vector<LocalEntry> out(P);
    for (Int c = 0; c < P; ++c) {
        LocalEntry& entry = out[c];
        if (c != 0) {
            int v = vp(c, p);
            if (v >= 1 && v % p == 0) {
                std::ostringstream os;
                os << "every member has v_" << p << "(a) = " << v << " with " << p << " | " << v;
                entry.status = TableStatus::Excluded;
                entry.reason = os.str();
                continue;
            }
        }
        entry.status = c == 0 ? TableStatus::HConditional : TableStatus::Shape;
        std::optional<Int> rep = h_representative(c, P, n);
        if (!rep) throw std::logic_error("local_table: no valid representative found");
        entry.shape = local_shape(*rep, n, p);
        for (int extra = 1; extra <= kExtraRepresentatives; ++extra) {
            std::optional<Int> more = h_representative(c, P, n, (*rep - mod_canonical(c, P)) / P + extra);
            if (!more) break;
            if (!shape_equal(entry.shape, local_shape(*more, n, p)))
                throw std::logic_error("local_table: representatives of one class disagree");
        }
    }
    return out;
}

}  // namespace

ShapeTable build_table(int n) {
    if (n < 3 || n > kMaxTableDegree) throw std::domain_error("build_table: n out of range");
    ShapeTable table;
    table.n = n;
    table.M = modulus_M(n);
    auto factors = factorize(n).factors;

    std::vector<std::vector<LocalEntry>> locals;
    for (const auto& [p, e] : factors) locals.push_back(local_table(n, p, e));

    table.entries.resize(table.M);
    for (Int r = 0; r < table.M; ++r) {
        TableEntry& entry = table.entries[r];
        entry.residue = r;
        entry.status = TableStatus::Shape;
        entry.shape.n = n;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            Int P = ipow(factors[i].first, factors[i].second + 1);
            const LocalEntry& le = locals[i][r % P];
            if (le.status == TableStatus::Excluded) {
                entry.status = TableStatus::Excluded;
                std::ostringstream os;
                os << "at p = " << factors[i].first << ": " << le.reason;
                entry.reason = os.str();
                entry.shape.locals.clear();
                break;
            }
            if (le.status == TableStatus::HConditional) entry.status = TableStatus::HConditional;
            entry.shape.locals.push_back(le.shape);
        }
    }
    return table;
}

PeriodReport verify_period(int n, Int X) {
    ShapeTable table = build_table(n);
    if (X < table.M) throw std::domain_error("verify_period: need X >= M(n)");
    PeriodReport report{n, X, 0, {}};

    std::vector<std::optional<Int>> first(table.M);
    for (Int abs_a = 1; abs_a <= X; ++abs_a) {
        for (Int a : {abs_a, -abs_a}) {
            if (!hypothesis_H(a, n)) continue;
            Int r = mod_canonical(a, table.M);
            const TableEntry& entry = table.entries[r];
            if (entry.status == TableStatus::Excluded) {
                report.conflicts.push_back({a, r, 0, "member of an excluded class satisfies the hypothesis"});
                continue;
            }
            GlobalShape shape = global_shape(a, n);
            if (!first[r]) {
                first[r] = a;
                ++report.classes_checked;
            }
            if (auto diff = global_difference(shape, entry.shape))
                report.conflicts.push_back({a, *first[r], diff->first, diff->second + " differs from the table entry"});
        }
    }
    return report;
}

SharpnessWitness find_sharpness_witness(int n, Int p) {
    int e = vp(n, p);
    if (e < 1) throw std::domain_error("find_sharpness_witness: p must divide n");

    Int pe = ipow(p, e), pe1 = ipow(p, e + 1);
    std::optional<Int> a;
    for (Int j = 1; j <= kSearchBudget && !a; ++j) {
        if (j % p == 0) continue;  // keep v_p(a - 1) = e exactly
        if (hypothesis_H(1 + pe * j, n)) a = 1 + pe * j;
    }
    std::optional<Int> a2;
    for (Int j = 1; j <= kSearchBudget && !a2; ++j)
        if (hypothesis_H(1 + pe1 * j, n)) a2 = 1 + pe1 * j;
    if (!a || !a2) throw size_error("find_sharpness_witness: search budget exhausted");

    LocalShape sa = local_shape(*a, n, p), sa2 = local_shape(*a2, n, p);
    if (shape_equal(sa, sa2))
        throw std::logic_error("find_sharpness_witness: seeded families do not separate shapes");

    SharpnessWitness w;
    w.p = p;
    w.e = e;
    w.a = *a;
    w.a2 = *a2;
    w.congruence_level = e;
    std::ostringstream os;
    os << first_difference(sa, sa2) << " = " << sa.d << " vs " << sa2.d;
    w.differing = os.str();
    return w;
}

bool MinimalityReport::passed() const {
    if (checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const MinimalityCheck& c) { return c.refuted; });
}

MinimalityReport verify_minimality(int n, Int X) {
    Int M = modulus_M(n);
    if (X < M) throw std::domain_error("verify_minimality: need X >= M(n)");
    MinimalityReport report{n, X, {}};

    for (const auto& [p, e] : factorize(n).factors) {
        Int N = M / p;
        MinimalityCheck check{p, N, 0, 0, false};
        std::vector<std::optional<std::pair<Int, GlobalShape>>> first(N);
        for (Int a = 1; a <= X && !check.refuted; ++a) {
            if (!hypothesis_H(a, n)) continue;
            Int r = mod_canonical(a, N);
            GlobalShape shape = global_shape(a, n);
            if (!first[r]) {
                first[r] = {a, shape};
                continue;
            }
            if (global_difference(shape, first[r]->second)) {
                check.a = first[r]->first;
                check.a2 = a;
                check.refuted = true;
            }
        }
        report.checks.push_back(check);
    }
    return report;
}

}  // namespace pureshape
