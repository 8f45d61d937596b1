#ifndef PURESHAPE_TABLE_HPP_
#define PURESHAPE_TABLE_HPP_

#include <string>
#include <vector>

#include "pureshape/shape.hpp"

namespace pureshape {

enum class TableStatus {
    Shape,         // every member of the class with the hypothesis has this shape
    HConditional,  // v_p(a) varies within the class; shape given under the hypothesis
    Excluded,      // no member satisfies the hypothesis
};

struct TableEntry {
    Int residue;
    TableStatus status;
    GlobalShape shape;   // meaningful unless Excluded
    std::string reason;  // Excluded only
};

struct ShapeTable {
    int n;
    Int M;                           // n * rad(n)
    std::vector<TableEntry> entries; // index = residue mod M
};

// Local tables per p | n over residues mod p^{e+1}, glued by CRT.  Entries
// are computed from the smallest positive representative satisfying the
// hypothesis and spot-checked against further representatives.
ShapeTable build_table(int n);

struct PeriodConflict {
    Int a;
    Int other;          // earlier member of the class, or the residue for a table mismatch
    Int p;              // prime where the shapes first differ (0 = structural)
    std::string field;
};

struct PeriodReport {
    int n;
    Int X;
    Int classes_checked;
    std::vector<PeriodConflict> conflicts;
    bool passed() const { return conflicts.empty(); }
};

// Sweeps all hypothesis-satisfying a with 0 < |a| <= X and checks that the
// shape is constant on residue classes mod M(n) and equal to the table entry.
PeriodReport verify_period(int n, Int X);

struct SharpnessWitness {
    Int p;
    int e;
    Int a, a2;              // a = a2 mod p^e, a != a2 mod p^{e+1}, shapes differ at p
    int congruence_level;   // = e
    std::string differing;  // first differing invariant
};

// Smallest valid pair from the seeded families a = 1 + p^e j, a2 = 1 + p^{e+1} j'.
SharpnessWitness find_sharpness_witness(int n, Int p);

struct MinimalityCheck {
    Int p;        // dropped prime: candidate period N = M(n)/p
    Int N;
    Int a, a2;    // conflict pair: a = a2 mod N with different shapes
    bool refuted; // candidate fails as a period
};

struct MinimalityReport {
    int n;
    Int X;
    std::vector<MinimalityCheck> checks;
    bool passed() const;  // every proper candidate M(n)/p is refuted
};

MinimalityReport verify_minimality(int n, Int X);

}  // namespace pureshape

#endif  // PURESHAPE_TABLE_HPP_
