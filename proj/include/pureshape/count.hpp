#ifndef PURESHAPE_COUNT_HPP_
#define PURESHAPE_COUNT_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pureshape/arith.hpp"

namespace pureshape {

enum class Admissibility { Inadmissible, Weak, Strict };

// One witness per p^alpha exactly dividing q; v_r is v_p of the residue
// class, capped at alpha when p^alpha divides r.
struct AdmissibilityWitness {
    Int p;
    int alpha;
    int v_r;
};

struct AdmissibilityVerdict {
    Admissibility verdict;
    std::vector<AdmissibilityWitness> witnesses;
    bool weakly_admissible() const { return verdict != Admissibility::Inadmissible; }
    bool strictly_admissible() const { return verdict == Admissibility::Strict; }
};

// Inadmissible iff some p^alpha || q has alpha >= n and v_r >= n (the class
// forces p^n | a); strict iff v_r < min(alpha, n) at every p.
AdmissibilityVerdict admissibility(Int r, Int q, int n);

// #{a : 0 < |a| <= X, a = r (mod q), no prime n-th power divides a}.
// Segmented sieve; budget from PURESHAPE_MEMORY_MB (default 256).
Int count_exact(Int X, Int q, Int r, int n);

double zeta_value(int n);

// (2X/q) / zeta(n) * prod_{p|q} (1-p^-n)^-1 * prod_{p^a||q, p^a|r} (1-p^(a-n))
double main_term(Int X, Int q, Int r, int n);

struct CountReport {
    Int X, q, r;
    int n;
    Int exact;
    double main;
    double relative_error;
    AdmissibilityVerdict adm;
};

CountReport count_report(Int X, Int q, Int r, int n);

// (#R / M(n)) / (zeta(n) * prod_{p | n} (1 - p^{-n})); members of R must have
// v_p <= 1 for every p | n.
double density_shape_classes(int n, const std::vector<Int>& R);
// Exact pi-power rendering ("12/pi^4") when zeta(n) has a closed form.
std::optional<std::string> density_symbolic(int n, const std::vector<Int>& R);

// Partition of the v_p <= 1 residues mod M(n) by the k-pattern of the table
// entry (per-prime k_{p,m} sequences over ascending p | n).
std::map<std::vector<std::vector<int>>, std::vector<Int>> shape_class_partition(int n);

struct RpCount {
    int k;
    Int count;  // units u mod p^{e+1} with v_p(u^{p-1} - 1) >= k
};

// Exhaustive unit enumeration; verifies count = (p-1) p^{e-(k-1)}.
std::vector<RpCount> rp_distribution_exact(Int p, int e);

struct WieferichSplit {
    Int num_r0, den_r0;      // proportion of units with r_p = 0
    Int num_rge1, den_rge1;  // proportion with r_p >= 1
};

WieferichSplit wieferich_split(Int p, int e = 1);

}  // namespace pureshape

#endif  // PURESHAPE_COUNT_HPP_
