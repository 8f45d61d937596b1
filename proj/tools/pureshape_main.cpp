// Command-line front end.  Every subcommand prints either a human table
// (--format text) or a single-line JSON envelope with stable field order
// (--format json): {command, params, result, provenance}.
//
// Exit codes: 0 success, 2 precondition violation, 3 verification conflict,
// 4 unsupported branch, 5 resource budget exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pureshape/count.hpp"
#include "pureshape/disc.hpp"
#include "pureshape/errors.hpp"
#include "pureshape/newton.hpp"
#include "pureshape/shape.hpp"
#include "pureshape/table.hpp"

namespace ps = pureshape;
using ps::Int;
using json = nlohmann::ordered_json;

namespace {

std::string real15_str(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

// Reals are rounded to 15 significant digits before serialization so that
// identical inputs give byte-identical output.
json real15(double x) { return json(std::strtod(real15_str(x).c_str(), nullptr)); }

void emit(const std::string& command, const json& params, const json& result,
          const json& provenance) {
    json envelope;
    envelope["command"] = command;
    envelope["params"] = params;
    envelope["result"] = result;
    envelope["provenance"] = provenance;
    std::cout << envelope.dump() << "\n";
}

int fail_with(const std::string& command, const std::string& format,
              const std::string& message, int code) {
    if (format == "json") {
        json envelope;
        envelope["command"] = command;
        envelope["error"] = message;
        envelope["exit"] = code;
        std::cout << envelope.dump() << "\n";
    } else {
        std::cout << "error: " << message << "\n";
    }
    return code;
}

int run(const std::string& command, const std::string& format,
        const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::domain_error& err) {
        return fail_with(command, format, err.what(), 2);
    } catch (const ps::unsupported_error& err) {
        return fail_with(command, format, err.what(), 4);
    } catch (const ps::size_error& err) {
        return fail_with(command, format, err.what(), 5);
    }
}

// theta-polynomial with the given coefficients of 1, theta, theta^2, ...
std::string theta_poly(const std::vector<Int>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        if (coeffs[i] != 1 || i == 0) os << coeffs[i];
        if (coeffs[i] != 1 && i > 0) os << "*";
        if (i == 1) os << "theta";
        if (i > 1) os << "theta^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string int_list(const std::vector<int>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

json beta_json(const std::vector<ps::BetaReduction>& beta) {
    json arr = json::array();
    for (const auto& b : beta) {
        json jb;
        jb["m"] = b.m;
        jb["modulus"] = b.modulus;
        jb["coeffs"] = b.coeffs;
        arr.push_back(jb);
    }
    return arr;
}

json local_json(const ps::LocalShape& ls) {
    json jl;
    jl["p"] = ls.p;
    jl["e"] = ls.e;
    jl["v"] = ls.v_a;
    jl["r"] = ls.r.value;
    jl["r_at_precision_cap"] = ls.r.at_precision_cap;
    jl["d"] = ls.d;
    jl["k"] = ls.k;
    if (ls.beta) jl["beta"] = beta_json(*ls.beta);
    return jl;
}

void local_text(std::ostream& os, const ps::LocalShape& ls) {
    os << "p = " << ls.p << ": e = " << ls.e << ", v_p(a) = " << ls.v_a
       << ", r_p = " << ls.r.value << (ls.r.at_precision_cap ? " (at precision cap)" : "")
       << ", d_p = " << ls.d << ", k = " << int_list(ls.k) << "\n";
    if (ls.beta)
        for (const auto& b : *ls.beta)
            if (b.modulus > 1)
                os << "  beta_" << b.m << " = " << theta_poly(b.coeffs)
                   << " (mod " << b.modulus << ")\n";
}

const char* status_str(ps::TableStatus s) {
    switch (s) {
        case ps::TableStatus::Shape: return "shape";
        case ps::TableStatus::HConditional: return "h-conditional";
        default: return "excluded";
    }
}

json table_record(const ps::TableEntry& entry) {
    json rec;
    rec["class"] = entry.residue;
    rec["status"] = status_str(entry.status);
    if (entry.status == ps::TableStatus::Excluded) {
        rec["reason"] = entry.reason;
        return rec;
    }
    json primes = json::array();
    for (const auto& ls : entry.shape.locals) {
        json jp;
        jp["p"] = ls.p;
        jp["e"] = ls.e;
        jp["d"] = ls.d;
        jp["k"] = ls.k;
        if (ls.beta) jp["beta"] = beta_json(*ls.beta);
        primes.push_back(jp);
    }
    rec["primes"] = primes;
    return rec;
}

std::string side_str(const ps::Side& s) {
    std::ostringstream os;
    os << "(" << s.from.x << ", " << s.from.y << ") -> (" << s.to.x << ", " << s.to.y << ")";
    return os.str();
}

json side_json(const ps::Side& s) {
    json js;
    js["from"] = {s.from.x, s.from.y};
    js["to"] = {s.to.x, s.to.y};
    js["slope"] = std::to_string(s.slope_num) + "/" + std::to_string(s.slope_den);
    js["height"] = s.height();
    js["degree"] = s.degree();
    return js;
}

const char* adm_str(ps::Admissibility a) {
    switch (a) {
        case ps::Admissibility::Strict: return "strict";
        case ps::Admissibility::Weak: return "weak";
        default: return "inadmissible";
    }
}

json adm_json(const ps::AdmissibilityVerdict& v) {
    json jv;
    jv["verdict"] = adm_str(v.verdict);
    json ws = json::array();
    for (const auto& w : v.witnesses) {
        json jw;
        jw["p"] = w.p;
        jw["alpha"] = w.alpha;
        jw["v_r"] = w.v_r;
        ws.push_back(jw);
    }
    jv["witnesses"] = ws;
    return jv;
}

int cmd_shape(int n, Int a, const std::string& format) {
    ps::GlobalShape g = ps::global_shape(a, n);
    std::vector<ps::BasisElement> basis = ps::basis_description(a, n);

    if (format == "json") {
        json result;
        result["n"] = n;
        result["a"] = a;
        json locals = json::array();
        for (const auto& ls : g.locals) locals.push_back(local_json(ls));
        result["locals"] = locals;
        json elements = json::array();
        std::vector<Int> denoms;
        for (const auto& b : basis) {
            json jb;
            jb["m"] = b.m;
            jb["c"] = b.c;
            jb["p_part"] = b.p_part;
            jb["denom"] = b.denom;
            if (b.beta) jb["beta"] = *b.beta;
            jb["rendered"] = ps::render_basis_element(b);
            elements.push_back(jb);
            denoms.push_back(b.denom);
        }
        result["basis"] = elements;
        result["denominators"] = denoms;
        json prov;
        prov["r_p"] = "r_p(a) = v_p(a^(p-1) - 1) - 1";
        prov["d_p"] = "d_p = max(0, min(r_p, e_p))";
        prov["k"] = "k_{p,m} = max{ k <= d_p : m >= n - n/p^k }";
        prov["C_m"] = "C_m(a) = prod_j a_j^floor(j*m/n)";
        prov["basis"] = "(theta^m + beta_m) / (C_m(a) * prod_p p^{k_{p,m}})";
        json params;
        params["n"] = n;
        params["a"] = a;
        emit("shape", params, result, prov);
        return 0;
    }

    std::cout << "integral basis shape for Q(a^(1/n)), a = " << a << ", n = " << n << "\n";
    for (const auto& ls : g.locals) local_text(std::cout, ls);
    std::ostringstream denoms;
    for (const auto& b : basis) {
        std::cout << "m = " << b.m << ": " << ps::render_basis_element(b) << "\n";
        denoms << (b.m ? ", " : "") << b.denom;
    }
    std::cout << "denominators: (" << denoms.str() << ")\n";
    return 0;
}

int cmd_table(int n, const std::string& out, const std::string& format) {
    ps::ShapeTable table = ps::build_table(n);

    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw std::domain_error("cannot open output file " + out);
        for (const auto& entry : table.entries) f << table_record(entry).dump() << "\n";
    }

    if (format == "json") {
        json result;
        result["n"] = n;
        result["M"] = table.M;
        json records = json::array();
        for (const auto& entry : table.entries) records.push_back(table_record(entry));
        result["records"] = records;
        result["written"] = out.empty() ? json(nullptr) : json(out);
        json prov;
        prov["M"] = "M(n) = n * rad(n)";
        prov["period"] = "the shape depends on a only through a mod M(n)";
        json params;
        params["n"] = n;
        if (!out.empty()) params["out"] = out;
        emit("table", params, result, prov);
        return 0;
    }

    std::cout << "shape classes mod M(" << n << ") = " << table.M << "\n";
    // Group residues sharing a record so equal rows print once.
    std::map<std::string, std::vector<Int>> groups;
    std::vector<std::string> order;
    for (const auto& entry : table.entries) {
        json rec = table_record(entry);
        rec.erase("class");
        std::string key = rec.dump();
        if (groups.find(key) == groups.end()) order.push_back(key);
        groups[key].push_back(entry.residue);
    }
    for (const auto& key : order) {
        const auto& members = groups[key];
        const ps::TableEntry& entry = table.entries[members.front()];
        std::ostringstream who;
        who << "a in {";
        for (std::size_t i = 0; i < members.size(); ++i) who << (i ? ", " : "") << members[i];
        who << "} (mod " << table.M << ")";
        std::cout << who.str() << ": ";
        if (entry.status == ps::TableStatus::Excluded) {
            std::cout << "excluded, " << entry.reason << "\n";
            continue;
        }
        bool first = true;
        for (const auto& ls : entry.shape.locals) {
            std::cout << (first ? "" : "; ") << "k_" << ls.p << " = " << int_list(ls.k);
            first = false;
            if (ls.beta)
                for (const auto& b : *ls.beta)
                    if (b.modulus > 1)
                        std::cout << ", beta_" << b.m << " = " << theta_poly(b.coeffs)
                                  << " (mod " << b.modulus << ")";
        }
        if (entry.status == ps::TableStatus::HConditional)
            std::cout << " [v_p(a) varies; shape under the standing hypothesis]";
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify_period(int n, Int bound, const std::string& format) {
    ps::PeriodReport report = ps::verify_period(n, bound);

    if (format == "json") {
        json result;
        result["n"] = n;
        result["X"] = bound;
        result["M"] = ps::modulus_M(n);
        result["classes_checked"] = report.classes_checked;
        json conflicts = json::array();
        for (const auto& c : report.conflicts) {
            json jc;
            jc["a"] = c.a;
            jc["other"] = c.other;
            jc["p"] = c.p;
            jc["field"] = c.field;
            conflicts.push_back(jc);
        }
        result["conflicts"] = conflicts;
        result["passed"] = report.passed();
        json prov;
        prov["period"] = "the shape depends on a only through a mod M(n) = n * rad(n)";
        json params;
        params["n"] = n;
        params["bound"] = bound;
        emit("verify-period", params, result, prov);
    } else {
        std::cout << "period check mod " << ps::modulus_M(n) << " over 0 < |a| <= " << bound
                  << ": " << report.classes_checked << " classes, "
                  << (report.passed() ? "no conflicts" : "CONFLICTS") << "\n";
        for (const auto& c : report.conflicts)
            std::cout << "conflict: a = " << c.a << " vs " << c.other << " at p = " << c.p
                      << " (" << c.field << ")\n";
    }
    return report.passed() ? 0 : 3;
}

int cmd_sharpness(int n, Int p, const std::string& format) {
    ps::SharpnessWitness w = ps::find_sharpness_witness(n, p);
    Int agree = ps::ipow(w.p, w.congruence_level);

    if (format == "json") {
        json result;
        result["n"] = n;
        result["p"] = w.p;
        result["e"] = w.e;
        result["a"] = w.a;
        result["a2"] = w.a2;
        result["agree_mod"] = agree;
        result["differ_mod"] = agree * w.p;
        result["differing"] = w.differing;
        json prov;
        prov["sharpness"] = "no modulus below p^(e+1) at p determines the local shape";
        json params;
        params["n"] = n;
        params["p"] = p;
        emit("sharpness", params, result, prov);
    } else {
        std::cout << "a = " << w.a << " and a' = " << w.a2 << " agree mod " << agree
                  << " but their shapes at p = " << w.p << " differ (" << w.differing
                  << "); the table modulus needs p^" << w.e + 1 << "\n";
    }
    return 0;
}

int cmd_minimality(int n, Int bound, const std::string& format) {
    ps::MinimalityReport report = ps::verify_minimality(n, bound);

    if (format == "json") {
        json result;
        result["n"] = n;
        result["X"] = bound;
        result["M"] = ps::modulus_M(n);
        json checks = json::array();
        for (const auto& c : report.checks) {
            json jc;
            jc["p"] = c.p;
            jc["N"] = c.N;
            jc["refuted"] = c.refuted;
            if (c.refuted) {
                jc["a"] = c.a;
                jc["a2"] = c.a2;
            }
            checks.push_back(jc);
        }
        result["checks"] = checks;
        result["passed"] = report.passed();
        json prov;
        prov["minimality"] = "every proper divisor M(n)/p fails as a period of the shape";
        json params;
        params["n"] = n;
        params["bound"] = bound;
        emit("minimality", params, result, prov);
    } else {
        std::cout << "minimality of M(" << n << ") = " << ps::modulus_M(n)
                  << " over 1 <= a <= " << bound << "\n";
        for (const auto& c : report.checks) {
            std::cout << "N = " << c.N << " = M/" << c.p << ": ";
            if (c.refuted)
                std::cout << "refuted by a = " << c.a << ", a' = " << c.a2 << "\n";
            else
                std::cout << "NOT refuted up to the bound\n";
        }
        std::cout << (report.passed() ? "all proper candidates refuted"
                                      : "some candidate survived the sweep")
                  << "\n";
    }
    return report.passed() ? 0 : 3;
}

int cmd_count(int n, Int q, Int r, Int bound, const std::string& format) {
    ps::CountReport report = ps::count_report(bound, q, r, n);

    if (format == "json") {
        json result;
        result["X"] = report.X;
        result["q"] = report.q;
        result["r"] = report.r;
        result["n"] = report.n;
        result["exact"] = report.exact;
        result["main_term"] = real15(report.main);
        result["relative_error"] = real15(report.relative_error);
        result["admissibility"] = adm_json(report.adm);
        json prov;
        prov["count"] = "F_n(X; q, r) = #{0 < |a| <= X : a n-th-power-free, a = r mod q}";
        prov["main"] =
            "(2X/q) (1/zeta(n)) prod_{p | q} (1 - p^-n)^-1 prod_{p^alpha || q, p^alpha | r} "
            "(1 - p^(alpha-n))";
        json params;
        params["n"] = n;
        params["q"] = q;
        params["r"] = r;
        params["bound"] = bound;
        emit("count", params, result, prov);
    } else {
        std::cout << "n-th-power-free a with 0 < |a| <= " << bound << ", a = " << r << " mod "
                  << q << " (n = " << n << ")\n";
        std::cout << "exact = " << report.exact << ", main term = " << real15_str(report.main)
                  << ", relative error = " << real15_str(report.relative_error) << "\n";
        std::cout << "class admissibility: " << adm_str(report.adm.verdict) << "\n";
    }
    return 0;
}

int cmd_density(int n, const std::vector<Int>& classes, const std::string& format) {
    double density = ps::density_shape_classes(n, classes);
    std::optional<std::string> symbolic = ps::density_symbolic(n, classes);

    if (format == "json") {
        json result;
        result["n"] = n;
        result["classes"] = classes;
        result["M"] = ps::modulus_M(n);
        result["symbolic"] = symbolic ? json(*symbolic) : json(nullptr);
        result["density"] = real15(density);
        json prov;
        prov["density"] =
            "(|R|/M) (1/zeta(n)) prod_{p | M} (1 - p^-n)^-1 among n-th-power-free a";
        json params;
        params["n"] = n;
        params["classes"] = classes;
        emit("density", params, result, prov);
    } else {
        std::cout << "density of the shape classes ";
        for (std::size_t i = 0; i < classes.size(); ++i)
            std::cout << (i ? ", " : "{") << classes[i];
        std::cout << "} mod " << ps::modulus_M(n) << " (n = " << n << "): ";
        if (symbolic) std::cout << *symbolic << " = ";
        std::cout << real15_str(density) << "\n";
    }
    return 0;
}

int cmd_rp_dist(Int p, int e, const std::string& format) {
    std::vector<ps::RpCount> dist = ps::rp_distribution_exact(p, e);
    ps::WieferichSplit split = ps::wieferich_split(p, e);

    if (format == "json") {
        json result;
        result["p"] = p;
        result["e"] = e;
        json counts = json::array();
        for (const auto& rc : dist) {
            json jc;
            jc["k"] = rc.k;
            jc["count"] = rc.count;
            counts.push_back(jc);
        }
        result["counts"] = counts;
        result["split"] = {{"r0", {split.num_r0, split.den_r0}},
                           {"rge1", {split.num_rge1, split.den_rge1}}};
        json prov;
        prov["law"] = "#{u mod p^(e+1) : v_p(u^(p-1) - 1) >= k} = (p-1) p^(e-(k-1))";
        prov["split"] = "r_p = 0 for (p-1)/p of the units, r_p >= 1 for 1/p";
        json params;
        params["p"] = p;
        params["e"] = e;
        emit("rp-dist", params, result, prov);
    } else {
        std::cout << "units u mod " << p << "^" << e + 1 << " by v_" << p << "(u^(" << p
                  << "-1) - 1)\n";
        for (const auto& rc : dist)
            std::cout << "v >= " << rc.k << ": " << rc.count << "\n";
        std::cout << "r_p = 0 proportion " << split.num_r0 << "/" << split.den_r0
                  << ", r_p >= 1 proportion " << split.num_rge1 << "/" << split.den_rge1
                  << "\n";
    }
    return 0;
}

int cmd_newton(int n, Int a, Int p, const std::string& format) {
    ps::Order1Report report = ps::order1_analysis(a, n, p);

    if (format == "json") {
        json result;
        result["n"] = n;
        result["a"] = a;
        result["p"] = p;
        result["ramified"] = report.expansion.ramified;
        result["u"] = report.expansion.u;
        json points = json::array();
        for (const auto& pt : ps::expansion_points(report.expansion))
            points.push_back({pt.x, pt.y});
        result["points"] = points;
        json sides = json::array();
        for (const auto& s : report.principal) sides.push_back(side_json(s));
        result["sides"] = sides;
        json residuals = json::array();
        for (const auto& rp : report.residuals) residuals.push_back(rp.coeffs);
        result["residuals"] = residuals;
        result["residuals_separable"] = report.residuals_separable;
        result["index_bound"] = report.index_bound;
        result["certifies_zero_index"] = report.certifies_zero_index();
        json prov;
        prov["polygon"] = "lower hull of (i, v_p(c_i)) for x^n - a developed at phi";
        prov["index"] = "v_p(index) <= #{lattice points under the principal polygon}, "
                        "with equality iff every residual is separable";
        json params;
        params["n"] = n;
        params["a"] = a;
        params["p"] = p;
        emit("newton", params, result, prov);
    } else {
        if (report.expansion.ramified)
            std::cout << "x^" << n << " - " << a << " at phi = x over p = " << p << "\n";
        else
            std::cout << "x^" << n << " - " << a << " at phi = x - " << report.expansion.u
                      << " over p = " << p << "\n";
        for (std::size_t i = 0; i < report.principal.size(); ++i) {
            const auto& s = report.principal[i];
            std::cout << "side " << side_str(s) << ", slope " << s.slope_num << "/"
                      << s.slope_den << ", residual " << theta_poly(report.residuals[i].coeffs)
                      << (ps::separable_mod_p(report.residuals[i].coeffs, p) ? " (separable)"
                                                                             : " (repeated root)")
                      << "\n";
        }
        std::cout << "index bound " << report.index_bound
                  << (report.certifies_zero_index() ? ": certifies zero index" : "") << "\n";
    }
    return 0;
}

int cmd_monogenic(int n, Int a, Int p, const std::string& format) {
    if (a == 0) throw std::domain_error("a must be nonzero");
    int e = ps::vp(n, p);
    std::optional<int> d;
    if (e >= 1) d = ps::local_shape(a, n, p).d;

    std::optional<bool> certificate;
    try {
        certificate = ps::order1_zero_index(a, n, p);
    } catch (const ps::unsupported_error&) {
        // No degree-one key polynomial; the unit-branch invariants decide below.
    }

    // With p | a the polygon certificate is authoritative (the basis keeps
    // p-denominators inside C_m even when d = 0).  With p coprime to a the
    // unit-branch verdict is d = 0; if also p coprime to n the discriminant
    // n^n a^(n-1) is a p-unit and p never divides the index.
    bool regular;
    if (a % p == 0)
        regular = certificate.value_or(false);
    else
        regular = d ? (*d == 0) : true;

    Int p2 = p * p;
    bool have_wieferich = e == 1 && a % p != 0;
    Int w = have_wieferich ? Int(ps::powmod_u64(ps::mod_canonical(a, p2), p - 1, p2)) : 0;

    if (format == "json") {
        json result;
        result["n"] = n;
        result["a"] = a;
        result["p"] = p;
        result["e"] = e;
        result["v_a"] = ps::vp(a, p);
        if (d) result["d"] = *d;
        result["zero_index_certificate"] = certificate ? json(*certificate) : json(nullptr);
        result["p_regular"] = regular;
        if (have_wieferich) {
            json jw;
            jw["congruence"] = "a^(p-1) mod p^2";
            jw["value"] = w;
            jw["regular_iff_not_one"] = true;
            jw["holds"] = w != 1;
            result["wieferich"] = jw;
        }
        json prov;
        prov["regular"] = "p does not divide the index of Z[theta] in the maximal order";
        prov["criterion"] = "for p^1 || n, p coprime to a: regular iff a^(p-1) != 1 mod p^2";
        json params;
        params["n"] = n;
        params["a"] = a;
        params["p"] = p;
        emit("monogenic", params, result, prov);
    } else {
        std::cout << "x^" << n << " - " << a << " at p = " << p << ": "
                  << (regular ? "p-regular (p does not divide the index)"
                              : "NOT p-regular (p divides the index)")
                  << "\n";
        if (d)
            std::cout << "d_p = " << *d
                      << (certificate ? (*certificate ? ", order-1 certificate holds"
                                                      : ", no order-1 certificate")
                                      : ", no degree-one key polynomial")
                      << "\n";
        if (have_wieferich)
            std::cout << a << "^" << p - 1 << " = " << w << " mod " << p2 << ": "
                      << (w != 1 ? "not 1, so p-regular" : "1, so p divides the index") << "\n";
    }
    return 0;
}

int cmd_disc(int n, Int a, Int p, const std::string& format) {
    ps::DiscLocalReport report = ps::disc_report(a, n, p);

    if (format == "json") {
        json result;
        result["n"] = report.n;
        result["a"] = report.a;
        result["p"] = report.p;
        result["e"] = report.e;
        result["n_p"] = report.n_p;
        result["t"] = report.t;
        result["valuation"] = report.valuation;
        json prov;
        prov["valuation"] =
            "v_p(disc) = n*e - 2*n_p*sum_{j=1..t} p^(e-j) with t = min(r_p, e_p), "
            "t = -1 when p | a";
        json params;
        params["n"] = n;
        params["a"] = a;
        params["p"] = p;
        emit("disc", params, result, prov);
    } else {
        std::cout << "v_" << p << "(disc) = " << report.valuation << " (e = " << report.e
                  << ", n_p = " << report.n_p << ", t = " << report.t << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"integral bases of pure number fields Q(a^(1/n))"};
    app.require_subcommand(1);

    int n = 0, e = 1;
    Int a = 0, p = 0, q = 1, r = 0, bound = 0;
    std::string format = "text", out;
    std::vector<Int> classes;

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    CLI::App* shape = app.add_subcommand("shape", "shape and integral basis of Q(a^(1/n))");
    shape->add_option("--n", n, "degree")->required();
    shape->add_option("--a", a, "radicand")->required();
    add_format(shape);

    CLI::App* table = app.add_subcommand("table", "shape lookup table mod M(n)");
    table->add_option("--n", n, "degree")->required();
    table->add_option("--out", out, "write one record per class to this file");
    add_format(table);

    CLI::App* period = app.add_subcommand("verify-period", "sweep check of the period M(n)");
    period->add_option("--n", n, "degree")->required();
    period->add_option("--bound", bound, "sweep bound on |a|")->required();
    add_format(period);

    CLI::App* sharp = app.add_subcommand("sharpness", "witness pair needing p^(e+1) at p");
    sharp->add_option("--n", n, "degree")->required();
    sharp->add_option("--p", p, "prime dividing n")->required();
    add_format(sharp);

    CLI::App* minimal = app.add_subcommand("minimality", "refute every sub-modulus M(n)/p");
    minimal->add_option("--n", n, "degree")->required();
    minimal->add_option("--bound", bound, "sweep bound on a")->required();
    add_format(minimal);

    CLI::App* count = app.add_subcommand("count", "power-free integers in a progression");
    count->add_option("--n", n, "power-free degree")->required();
    count->add_option("--q", q, "modulus")->required();
    count->add_option("--r", r, "residue")->required();
    count->add_option("--bound", bound, "count 0 < |a| <= bound")->required();
    add_format(count);

    CLI::App* density = app.add_subcommand("density", "natural density of shape classes");
    density->add_option("--n", n, "degree")->required();
    density->add_option("--classes", classes, "residues mod M(n)")
        ->required()
        ->delimiter(',');
    add_format(density);

    CLI::App* rpdist = app.add_subcommand("rp-dist", "distribution of r_p over units");
    rpdist->add_option("--p", p, "odd prime")->required();
    rpdist->add_option("--e", e, "precision exponent")->capture_default_str();
    add_format(rpdist);

    CLI::App* newton = app.add_subcommand("newton", "order-1 polygon of x^n - a at p");
    newton->add_option("--n", n, "degree")->required();
    newton->add_option("--a", a, "radicand")->required();
    newton->add_option("--p", p, "prime")->required();
    add_format(newton);

    CLI::App* monogenic = app.add_subcommand("monogenic", "does p divide the index of Z[theta]");
    monogenic->add_option("--n", n, "degree")->required();
    monogenic->add_option("--a", a, "radicand")->required();
    monogenic->add_option("--p", p, "prime")->required();
    add_format(monogenic);

    CLI::App* disc = app.add_subcommand("disc", "local field-discriminant valuation");
    disc->add_option("--n", n, "degree")->required();
    disc->add_option("--a", a, "radicand")->required();
    disc->add_option("--p", p, "prime dividing n")->required();
    add_format(disc);

    CLI11_PARSE(app, argc, argv);

    if (shape->parsed()) return run("shape", format, [&] { return cmd_shape(n, a, format); });
    if (table->parsed()) return run("table", format, [&] { return cmd_table(n, out, format); });
    if (period->parsed())
        return run("verify-period", format, [&] { return cmd_verify_period(n, bound, format); });
    if (sharp->parsed())
        return run("sharpness", format, [&] { return cmd_sharpness(n, p, format); });
    if (minimal->parsed())
        return run("minimality", format, [&] { return cmd_minimality(n, bound, format); });
    if (count->parsed())
        return run("count", format, [&] { return cmd_count(n, q, r, bound, format); });
    if (density->parsed())
        return run("density", format, [&] { return cmd_density(n, classes, format); });
    if (rpdist->parsed()) return run("rp-dist", format, [&] { return cmd_rp_dist(p, e, format); });
    if (newton->parsed())
        return run("newton", format, [&] { return cmd_newton(n, a, p, format); });
    if (monogenic->parsed())
        return run("monogenic", format, [&] { return cmd_monogenic(n, a, p, format); });
    if (disc->parsed()) return run("disc", format, [&] { return cmd_disc(n, a, p, format); });
    return 1;
}
