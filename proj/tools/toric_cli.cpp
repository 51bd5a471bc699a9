// toric-cli: command-line front end for the toric pipeline.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error,
// 3 computational guard exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/io.hpp"
#include "toric/report.hpp"

#ifndef TORIC_VERSION
#define TORIC_VERSION "dev"
#endif

namespace {

using namespace toric;

constexpr int kPass = 0, kFail = 1, kUsage = 2, kGuard = 3;

struct Common {
    std::string input;
    std::string dataset_name;
    std::string degree;
    std::size_t saturate = 1;
    bool json = false;
};

void add_source(CLI::App* cmd, Common& c) {
    cmd->add_option("input", c.input, "degree matrix JSON file");
    cmd->add_option("--dataset", c.dataset_name, "built-in dataset")
        ->check(CLI::IsMember(dataset_names()));
    cmd->add_flag("--json", c.json, "emit JSON");
}

void add_degree(CLI::App* cmd, Common& c, bool required = true) {
    auto* o = cmd->add_option("--degree", c.degree, "multidegree as a,b,c,...")->allow_extra_args(false);
    if (required) o->required();
}

void add_saturate(CLI::App* cmd, Common& c) {
    cmd->add_option("--saturate", c.saturate, "saturation depth")->check(CLI::PositiveNumber);
}

DegreeMatrix source(const Common& c) {
    if (!c.input.empty() && !c.dataset_name.empty()) throw UsageError("give either an input file or --dataset");
    if (!c.input.empty()) return load_degree_matrix(c.input);
    if (!c.dataset_name.empty()) return dataset(c.dataset_name);
    throw UsageError("no input: give a JSON file or --dataset");
}

Multidegree parse_degree(const std::string& s) {
    Multidegree d;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            d.emplace_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("bad multidegree entry \"" + tok + "\"");
        }
    }
    if (d.empty()) throw UsageError("empty multidegree");
    return d;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

// ---------------------------------------------------------------------------

int cmd_gale(const Common& c, const std::string& reference) {
    const DegreeMatrix q = source(c);
    const GaleDual g = gale_dual(q);
    std::optional<bool> match;
    if (!reference.empty()) {
        if (reference != "paper-AT") throw UsageError("unknown reference " + reference);
        if (q.pic_rank() != 5 || q.num_gens() != 10) throw UsageError("reference paper-AT needs a 5x10 grading");
        match = same_row_lattice(g.rays.transpose(), delpezzo4_reference_rays());
    }
    if (c.json) {
        Json j{{"numRays", g.num_rays()}, {"dim", g.dim()}, {"rays", to_json(g.all_rays())}};
        if (match) j["hermiteMatch"] = *match;
        print(j);
    } else {
        std::cout << g.num_rays() << " rays in Z^" << g.dim() << "\n";
        for (std::size_t k = 0; k < g.num_rays(); ++k)
            std::cout << "  " << q.labels()[k] << " " << to_string(g.ray(k)) << "\n";
        if (match) std::cout << "hermite comparison with " << reference << ": " << (*match ? "match" : "mismatch") << "\n";
    }
    return match && !*match ? kFail : kPass;
}

int cmd_basis(const Common& c) {
    const DegreeMatrix q = source(c);
    const auto ms = monomials_of_degree(q, parse_degree(c.degree));
    if (c.json) {
        print(Json{{"count", ms.size()}, {"exponents", to_json(ms)}});
    } else {
        std::cout << ms.size() << " monomials\n";
        for (const Exponent& e : ms) {
            std::vector<std::string> factors;
            for (std::size_t k = 0; k < e.size(); ++k)
                if (e[k] != 0) factors.push_back(q.labels()[k] + (e[k] == 1 ? "" : "^" + e[k].get_str()));
            std::cout << "  " << (factors.empty() ? "1" : join(factors, "*")) << "\n";
        }
    }
    return kPass;
}

IrrelevantResult radical_for(const DegreeMatrix& q, const Common& c) {
    IrrelevantOptions opt;
    opt.saturation_depth = c.saturate;
    opt.check_stability = true;
    IrrelevantResult r = irrelevant_radical(q, parse_degree(c.degree), opt);
    for (const std::string& w : r.warnings) std::cerr << "warning: " << w << "\n";
    return r;
}

int cmd_irrelevant(const Common& c) {
    const DegreeMatrix q = source(c);
    const IrrelevantResult r = radical_for(q, c);
    if (c.json) {
        print(Json{{"numGenerators", r.ideal.size()}, {"stable", *r.stable}, {"generators", to_json(r.ideal)}});
    } else {
        std::cout << r.ideal.size() << " minimal generators" << (*r.stable ? "" : " (not stable)") << "\n";
        for (const Support& s : r.ideal.generators()) {
            std::vector<std::string> f;
            for (std::size_t i : s.indices()) f.push_back(q.labels()[i - 1]);
            std::cout << "  " << join(f, "*") << "\n";
        }
    }
    return kPass;
}

int cmd_fan(const Common& c) {
    const DegreeMatrix q = source(c);
    const IrrelevantResult r = radical_for(q, c);
    const Fan f = fan_from_irrelevant(gale_dual(q), r.ideal);
    const FanCertificate cert = certify_fan(f);
    if (c.json) {
        print(fan_json(f, cert));
    } else {
        std::cout << "rays: " << cert.num_rays << "\nmaximal cones: " << cert.num_cones << "\n";
        auto line = [](const char* name, bool ok, const std::string& why) {
            std::cout << name << ": " << (ok ? "true" : "false") << (ok || why.empty() ? "" : " (" + why + ")") << "\n";
        };
        line("valid", cert.valid.ok, cert.valid.reason);
        line("simplicial", cert.simplicial.ok, cert.simplicial.reason);
        line("complete", cert.complete.ok, cert.complete.reason);
        line("projective", cert.projective.projective, cert.projective.reason);
    }
    return cert.valid.ok ? kPass : kFail;
}

int cmd_chamber(const Common& c, const std::string& other) {
    const DegreeMatrix q = source(c);
    const Multidegree w = parse_degree(c.degree);
    if (!other.empty()) {
        IrrelevantOptions opt;
        opt.saturation_depth = c.saturate;
        opt.check_stability = true;
        const ChamberComparison cmp = same_chamber(q, w, parse_degree(other), opt);
        for (const std::string& m : cmp.warnings) std::cerr << "warning: " << m << "\n";
        if (c.json)
            print(Json{{"same", cmp.same},
                       {"first", to_json(cmp.first)},
                       {"second", to_json(cmp.second)},
                       {"stable", *cmp.first_stable && *cmp.second_stable}});
        else
            std::cout << (cmp.same ? "same chamber" : "different chambers") << " (" << cmp.first.size() << " vs "
                      << cmp.second.size() << " radical generators)\n";
        return kPass;
    }
    const Chamber ch = chamber_of(q, w);
    if (c.json) {
        print(chamber_json(ch));
    } else {
        std::cout << "representative " << to_string(w) << "\n"
                  << (ch.full_dimensional ? "full-dimensional" : "lower-dimensional") << "\n";
        for (const IntVec& a : ch.inequalities) std::cout << "  " << to_string(a) << " . w >= 0\n";
        for (const IntVec& a : ch.equations) std::cout << "  " << to_string(a) << " . w = 0\n";
    }
    return kPass;
}

int cmd_embed(const Common& c) {
    if (!c.input.empty() || (!c.dataset_name.empty() && c.dataset_name != "delpezzo4"))
        throw UsageError("embed supports only the delpezzo4 dataset");
    const CoxPresentationPair p = delpezzo4_pair();
    const EmbeddingReport r = mori_embedding_report(p, IntMat::identity(5), delpezzo4_restriction_table());
    if (c.json) {
        print(embedding_json(r, p));
    } else {
        std::cout << "degree bijection: " << (r.degree_bijection.ok ? "pass" : "fail " + r.degree_bijection.reason)
                  << "\npic restriction: " << (r.pic_restriction.ok ? "pass" : "fail " + r.pic_restriction.reason)
                  << "\nrestriction table: " << (r.restriction_table.ok ? "pass" : "fail " + r.restriction_table.reason)
                  << "\nextremality: " << (r.extremality_ok ? "pass" : "fail") << "\noverall: "
                  << (r.overall ? "pass" : "fail") << "\n";
        for (const auto& [from, to] : r.restriction_table.matching) std::cout << "  " << from << " -> " << to << "\n";
        for (const std::string& n : r.notes) std::cout << "note: " << n << "\n";
    }
    return r.overall ? kPass : kFail;
}

int cmd_incidence_verify(bool json) {
    const IncidenceReport r = verify_printed_incidence();
    if (json) {
        print(incidence_json(r));
    } else {
        for (const TargetComparison& t : r.targets)
            std::cout << "Sigma cap " << t.target << ": " << intersection_json(t.computed).dump() << ", printed "
                      << t.printed.to_string() << (t.match ? "  match" : std::string("  ") + kInconsistent) << "\n";
        std::cout << "rank of printed points: " << r.printed_points_rank << "\n"
                  << "general position: " << to_string(r.general_position.verdict) << " ("
                  << r.general_position.detail << ")\n";
    }
    // Printed-data discrepancies are reported, not treated as failures.
    return kPass;
}

int cmd_incidence_search(bool json, std::uint64_t seed, unsigned max_tries) {
    const TransversalResult t = find_transversal_plane(special_planes(), seed, max_tries);
    if (json) {
        print(transversal_json(t));
    } else {
        std::cout << "plane found after " << t.attempts << " attempt(s), seed " << t.seed << "\n";
        for (const IntVec& row : t.plane.integer_basis()) std::cout << "  span " << to_string(row) << "\n";
        for (std::size_t i = 0; i < 4; ++i) std::cout << "  meets Sigma" << i + 1 << " at " << t.points[i].to_string() << "\n";
    }
    return kPass;
}

int cmd_reproduce(std::size_t saturate, std::uint64_t seed, bool json) {
    ReproduceOptions opt;
    opt.saturate = saturate;
    opt.seed = seed;
    opt.tool_version = TORIC_VERSION;
    const RunReport r = reproduce_example(opt);
    if (json) {
        print(r.to_json());
    } else {
        for (const CheckRecord& c : r.checks) {
            const std::string verdict = c.verdict_label.empty() ? (c.pass ? "pass" : "FAIL") : c.verdict_label;
            std::cout << verdict << "  " << c.name << "  expected " << c.expected.dump() << " " << c.tag << "\n";
        }
        for (const std::string& n : r.notes) std::cout << "note: " << n << "\n";
        std::cout << "overall: " << (r.overall() ? "pass" : "FAIL") << "\n";
    }
    if (const CheckRecord* f = r.first_failure()) std::cerr << "first failed check: " << f->name << "\n";
    return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric varieties from Cox ring presentations"};
    app.set_version_flag("--version", std::string(TORIC_VERSION));
    app.require_subcommand(1);

    Common c;
    std::string reference, other;
    std::uint64_t seed = 1;
    unsigned max_tries = 100;

    auto* gale = app.add_subcommand("gale", "rays of the Gale dual");
    add_source(gale, c);
    gale->add_option("--reference", reference, "compare Hermite forms with a reference matrix (paper-AT)");

    auto* basis = app.add_subcommand("basis", "monomials of a multidegree");
    add_source(basis, c);
    add_degree(basis, c);

    auto* irrelevant = app.add_subcommand("irrelevant", "irrelevant radical of a multidegree");
    add_source(irrelevant, c);
    add_degree(irrelevant, c);
    add_saturate(irrelevant, c);

    auto* fan = app.add_subcommand("fan", "fan of a multidegree with certifications");
    add_source(fan, c);
    add_degree(fan, c);
    add_saturate(fan, c);

    auto* chamber = app.add_subcommand("chamber", "GIT chamber of a class, or comparison with --with");
    add_source(chamber, c);
    add_degree(chamber, c);
    add_saturate(chamber, c);
    chamber->add_option("--with", other, "second class for chamber comparison");

    auto* embed = app.add_subcommand("embed", "Mori embedding report for X4 in W");
    add_source(embed, c);

    auto* incidence = app.add_subcommand("incidence", "incidence geometry in P^5");
    incidence->require_subcommand(1);
    auto* verify = incidence->add_subcommand("verify-paper", "check the printed plane and points");
    verify->add_flag("--json", c.json, "emit JSON");
    auto* search = incidence->add_subcommand("search", "construct a transversal plane");
    search->add_flag("--json", c.json, "emit JSON");
    search->add_option("--seed", seed, "random seed");
    search->add_option("--max-tries", max_tries, "attempt limit")->check(CLI::PositiveNumber);

    auto* reproduce = app.add_subcommand("reproduce-paper", "run every check of the X4 example");
    reproduce->add_flag("--json", c.json, "emit JSON");
    add_saturate(reproduce, c);
    reproduce->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*gale) return cmd_gale(c, reference);
        if (*basis) return cmd_basis(c);
        if (*irrelevant) return cmd_irrelevant(c);
        if (*fan) return cmd_fan(c);
        if (*chamber) return cmd_chamber(c, other);
        if (*embed) return cmd_embed(c);
        if (*verify) return cmd_incidence_verify(c.json);
        if (*search) return cmd_incidence_search(c.json, seed, max_tries);
        if (*reproduce) return cmd_reproduce(c.saturate, seed, c.json);
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kGuard;
    } catch (const SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
