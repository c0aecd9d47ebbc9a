#include "multifan/cli.hpp"

#include "multifan/builders.hpp"
#include "multifan/errors.hpp"
#include "multifan/classify.hpp"
#include "multifan/cohomology.hpp"
#include "multifan/genera.hpp"
#include "multifan/qseries.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

namespace multifan {

namespace {

ZVec parse_vector_arg(const std::string& spec) {
    ZVec v;
    std::string cur;
    std::istringstream is(spec);
    while (std::getline(is, cur, ',')) {
        try {
            v.emplace_back(cur);
        } catch (const std::invalid_argument&) {
            throw ParseError("bad integer in vector: " + cur);
        }
    }
    if (v.empty()) throw ParseError("empty vector argument");
    return v;
}

int env_jobs() {
    if (const char* env = std::getenv("MULTIFAN_JOBS")) {
        char* end = nullptr;
        long j = std::strtol(env, &end, 10);
        if (end && *end == '\0' && j >= 1 && j <= 1024) return static_cast<int>(j);
    }
    return 1;
}

void print_wpoly(std::ostream& out, const FracExpPoly& p, bool machine) {
    if (machine) {
        out << "wpoly";
        for (const auto& [e, c] : p.terms()) out << " " << e.get_str() << " " << c.get_str();
        out << "\n";
    } else {
        out << p.str() << "\n";
    }
}

GenusKind parse_series_kind(const std::string& kind) {
    if (kind == "plain") return GenusKind::Plain;
    if (kind == "orbifold") return GenusKind::Orbifold;
    return GenusKind::Breve;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact genera of complete simplicial multi-fans"};
    app.require_subcommand(1);

    std::string path, format = "human";
    std::string kind = "ty", series_kind = "plain", sigma_arg = "1/2", order_arg = "2";
    std::string vspec, theorem;
    long level = 0;
    int jobs = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("fan", path, "fan file")->required();
        sub->add_option("--format", format, "human or machine")
            ->check(CLI::IsMember({"human", "machine"}));
    };

    CLI::App* c_validate = app.add_subcommand("validate", "check a fan file");
    common(c_validate);

    CLI::App* c_complete = app.add_subcommand("complete", "completeness and degree");
    common(c_complete);

    CLI::App* c_genus = app.add_subcommand("genus", "T_y-type genera");
    common(c_genus);
    c_genus->add_option("--kind", kind, "ty, orbifold-ty, or breve-ty")
        ->check(CLI::IsMember({"ty", "orbifold-ty", "breve-ty"}));
    c_genus->add_option("--N", level, "level for breve-ty");

    CLI::App* c_elliptic = app.add_subcommand("elliptic", "q-expanded elliptic genera");
    common(c_elliptic);
    c_elliptic->add_option("--kind", series_kind, "plain, orbifold, or breve")
        ->check(CLI::IsMember({"plain", "orbifold", "breve"}));
    c_elliptic->add_option("--sigma", sigma_arg, "exact fraction k/N");
    c_elliptic->add_option("--order", order_arg, "q-series truncation order");
    c_elliptic->add_option("--v", vspec, "generic direction a,b,...");
    c_elliptic->add_option("--jobs", jobs, "parallel term evaluation");

    CLI::App* c_div = app.add_subcommand("divisibility", "first Chern class divisibility");
    common(c_div);
    c_div->add_option("--N", level, "divisor to test")->required();

    CLI::App* c_classify = app.add_subcommand("classify", "extremal family recognition");
    common(c_classify);

    CLI::App* c_verify = app.add_subcommand("verify", "check a vanishing/divisibility theorem");
    common(c_verify);
    c_verify->add_option("--theorem", theorem, "breve-vanish, hat-vanish, c1zero-vanish, hatT-div")
        ->required()
        ->check(CLI::IsMember({"breve-vanish", "hat-vanish", "c1zero-vanish", "hatT-div"}));
    c_verify->add_option("--sigma", sigma_arg, "exact fraction k/N");
    c_verify->add_option("--order", order_arg, "q-series truncation order");
    c_verify->add_option("--v", vspec, "generic direction a,b,... (default: 3 built-in)");
    c_verify->add_option("--jobs", jobs, "parallel term evaluation");

    std::vector<std::string> storage = args;
    std::vector<char*> argv;
    std::string prog = "multifan";
    argv.push_back(prog.data());
    for (std::string& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        MultiFan fan = from_file(path);
        const bool machine = format == "machine";
        if (machine)
            out << "hash " << file_hash(path) << "\n";
        else
            out << "fan " << path << " hash " << file_hash(path) << "\n";

        if (c_validate->parsed()) {
            ValidationReport rep = fan.validate();
            if (rep.problems.empty()) {
                out << (machine ? "valid 1\n" : "valid\n");
                return 0;
            }
            for (const std::string& p : rep.problems) err << "problem: " << p << "\n";
            return 1;
        }

        if (c_complete->parsed()) {
            bool complete = fan.is_complete();
            if (machine) {
                out << "complete " << (complete ? 1 : 0) << "\n";
                if (complete) out << "degree " << fan.degree() << "\n";
            } else if (complete) {
                out << "complete, degree " << fan.degree() << "\n";
            } else {
                out << "not complete\n";
            }
            return 0;
        }

        if (c_genus->parsed()) {
            if (kind == "ty") {
                print_wpoly(out, ty_genus(fan), machine);
            } else if (kind == "orbifold-ty") {
                print_wpoly(out, orbifold_ty(fan), machine);
            } else {
                if (level < 2) throw ParseError("breve-ty needs --N at least 2");
                CyclicExpPoly p = modified_orbifold_ty(fan, Int(level));
                if (machine) {
                    out << "cyclic " << level;
                    for (const Int& c : p.coeffs()) out << " " << c.get_str();
                    out << "\n";
                } else {
                    out << p.str() << "\n";
                }
            }
            return 0;
        }

        if (c_elliptic->parsed()) {
            Rat sigma = parse_rat(sigma_arg);
            Rat order = parse_rat(order_arg);
            ZVec v = vspec.empty() ? generic_lattice_vector(fan, 0) : parse_vector_arg(vspec);
            int j = jobs > 0 ? jobs : env_jobs();
            GenusQSeries s =
                elliptic_genus_along(fan, v, sigma, order, parse_series_kind(series_kind), j);
            out << (machine ? series_machine_text(s) : series_human_text(s));
            return 0;
        }

        if (c_div->parsed()) {
            if (level < 2) throw ParseError("divisibility needs --N at least 2");
            DivisibilityWitness plain = divisibility(fan, Int(level));
            DivisibilityWitness cartier = t_cartier_divisibility(fan, Int(level));
            out << "N " << level << "\n";
            out << "plain " << (plain.divisible ? (machine ? "1" : "yes") : (machine ? "0" : "no"));
            if (plain.u) out << (machine ? " u " : ", u = ") << vec_str(*plain.u);
            out << "\n";
            out << "t-cartier "
                << (cartier.t_cartier ? (machine ? "1" : "yes") : (machine ? "0" : "no"));
            if (cartier.x) {
                out << (machine ? " x" : ", x =");
                for (const Int& c : cartier.x->c) out << " " << c.get_str();
            }
            out << "\n";
            return 0;
        }

        if (c_classify->parsed()) {
            out << classification_text(classify_extremal(fan));
            return 0;
        }

        if (c_verify->parsed()) {
            Rat sigma = parse_rat(sigma_arg);
            Rat order = parse_rat(order_arg);
            Int N = sigma.get_den();
            int j = jobs > 0 ? jobs : env_jobs();

            if (theorem == "hatT-div") {
                bool ok = check_hatT_divisible(fan, N);
                out << (ok ? "verified" : "FAILED") << " hatT-div: orbifold T_y "
                    << (ok ? "divisible" : "not divisible") << " at N = " << N.get_str() << "\n";
                return ok ? 0 : 2;
            }

            std::vector<ZVec> directions;
            if (!vspec.empty()) {
                directions.push_back(parse_vector_arg(vspec));
            } else {
                for (int i = 0; i < 3; ++i)
                    directions.push_back(generic_lattice_vector(fan, i));
            }

            GenusKind gk;
            bool poly_ok = true;
            if (theorem == "breve-vanish") {
                gk = GenusKind::Breve;
                poly_ok = check_breve_vanishing(fan, N);
            } else if (theorem == "hat-vanish") {
                gk = GenusKind::Orbifold;
                if (!t_cartier_divisibility(fan, N).t_cartier)
                    throw PreconditionUnmet("c_1 is not T-Cartier divisible by the level");
            } else { // c1zero-vanish
                gk = GenusKind::Orbifold;
                if (!c1_is_zero(fan)) throw PreconditionUnmet("c_1 does not vanish");
                poly_ok = check_hatT_vanishing(fan);
            }

            bool series_ok = true;
            for (const ZVec& v : directions) {
                GenusQSeries s = elliptic_genus_along(fan, v, sigma, order, gk, j);
                if (!s.is_zero()) series_ok = false;
            }
            bool ok = poly_ok && series_ok;
            out << (ok ? "verified" : "FAILED") << " " << theorem << ": series "
                << (series_ok ? "zero" : "nonzero") << " to order " << order.get_str() << " ("
                << directions.size() << " direction" << (directions.size() == 1 ? "" : "s")
                << "), polynomial check " << (poly_ok ? "passed" : "failed") << "\n";
            return ok ? 0 : 2;
        }

        err << "error: no subcommand dispatched\n";
        return 1;
    } catch (const TheoremViolation& e) {
        err << "theorem violation: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionUnmet& e) {
        err << "precondition unmet: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace multifan
