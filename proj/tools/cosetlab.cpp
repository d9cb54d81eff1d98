#include "cosetlab/burnside.hpp"
#include "cosetlab/chambers.hpp"
#include "cosetlab/cosetposet.hpp"
#include "cosetlab/report.hpp"
#include "cosetlab/svg.hpp"
#include "cosetlab/typea.hpp"

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <iostream>
#include <optional>

using namespace cosetlab;

namespace {

struct Options {
    std::string group = "A2";
    std::string rho_mode = "seed";
    std::uint64_t rho_seed = 1;
    std::string rho_coeffs;  // comma-separated rationals in the weight basis
    int order = 5;
    std::string format = "json";
    std::string out;
    std::uint64_t cap = Group::kDefaultCap;
    int seeds = 3;
};

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat{Int(s)};
    Rat q{Int(s.substr(0, slash)), Int(s.substr(slash + 1))};
    q.canonicalize();
    return q;
}

std::vector<Rat> parse_rho(const std::string& text) {
    std::vector<Rat> c;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) c.push_back(parse_rational(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return c;
}

GenericVector pick_rho(const Group& g, const Options& opt, std::uint64_t seed) {
    if (opt.rho_mode == "seed") return choose_rho_seeded(g, seed);
    if (opt.rho_mode == "prop75") return choose_rho_spread(g);
    if (opt.rho_mode == "user") return choose_rho_user(g, parse_rho(opt.rho_coeffs));
    throw CLI::ValidationError("--rho-mode", "unknown mode " + opt.rho_mode);
}

nlohmann::json config_json(const Options& opt, const char* cmd) {
    nlohmann::json j;
    j["command"] = cmd;
    j["group"] = opt.group;
    j["rho_mode"] = opt.rho_mode;
    j["rho_seed"] = opt.rho_seed;
    if (!opt.rho_coeffs.empty()) j["rho"] = opt.rho_coeffs;
    j["order"] = opt.order;
    j["cap"] = opt.cap;
    j["seeds"] = opt.seeds;
    return j;
}

int emit(const ReportDocument& doc, const Options& opt) {
    std::string text;
    if (opt.format == "json")
        text = doc.to_json();
    else if (opt.format == "csv")
        text = doc.to_csv();
    else if (opt.format == "text")
        text = doc.to_text();
    else
        throw CLI::ValidationError("--format", "unknown format " + opt.format);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        f << text;
    }
    return 0;
}

int cmd_xi(const Options& opt) {
    Group g = Group::build(GroupSymbol::parse(opt.group), opt.cap);
    Lattice l = Lattice::build(g);
    BurnsideRing ring(g, l);
    BurnsideElement xi = ring.top_homology_character();
    BurnsideElement xi_sign = ring.tensor_sign(xi);

    ReportDocument doc(config_json(opt, "xi"));
    doc.add("xi", "burnside", burnside_json(ring, xi));
    doc.add("xi_tensor_sign", "burnside", burnside_json(ring, xi_sign));
    doc.add("dim_xi", "integer", ring.dim(xi).get_str());
    doc.add("mult_trivial_in_xi", "integer", ring.mult_trivial(xi).get_str());
    doc.add("mult_sign_in_xi", "integer", ring.mult_sign(xi).get_str());
    if (g.symbol().family == Family::A) {
        SymFunc fr = frobenius(ring, xi);
        doc.add("frobenius_h", "symfunc", symfunc_json(fr));
        doc.add("frobenius_e", "symfunc", symfunc_json(fr.to(SymFunc::Basis::E)));
        doc.add("frobenius_schur", "symfunc", symfunc_json(fr.to(SymFunc::Basis::S)));
    }
    return emit(doc, opt);
}

int cmd_verify(const Options& opt) {
    Group g = Group::build(GroupSymbol::parse(opt.group), opt.cap);
    Lattice l = Lattice::build(g);
    BurnsideRing ring(g, l);
    const int n = g.rank();
    ReportDocument doc(config_json(opt, "verify"));

    BurnsideElement xi = ring.top_homology_character();
    doc.add_check("xi_orbit_vs_flat_sum", xi == ring.top_homology_character_all_flats());

    Int mu_l = l.mobius_to_top(l.bottom());
    Int signed_mu = (n % 2) ? -mu_l : mu_l;
    doc.add_check("multiplicity_trivial_zero", ring.mult_trivial(xi) == 0);
    doc.add_check("multiplicity_sign_is_mu", ring.mult_sign(xi) == signed_mu);

    BurnsideElement xi_sign = ring.tensor_sign(xi);
    doc.add_check("sign_tensored_nonnegative", xi_sign.nonnegative());
    doc.add_check("sign_tensored_coeff_sum", xi_sign.coeff_sum() == abs(mu_l));

    // Whitney components assemble the homology character.
    {
        BurnsideElement sum;
        for (int k = 0; k <= n; ++k) {
            BurnsideElement t = ring.whitney_component(k);
            if ((n + k) % 2) {
                BurnsideElement m;
                m -= t;
                t = m;
            }
            sum += t;
        }
        doc.add_check("whitney_alternating_sum", sum == xi);
    }

    for (int s = 1; s <= opt.seeds; ++s) {
        std::string tag = "seed" + std::to_string(s);
        GenericVector rho = pick_rho(g, opt, opt.rho_seed + s - 1);
        PositiveComplex pc = PositiveComplex::build(ring, rho);
        doc.add_check(tag + "_facet_count",
                      Int(static_cast<long>(pc.facets().size())) == abs(mu_l));
        // Faces spanning a fixed flat are counted by its Moebius value.
        {
            std::map<int, long> per_flat;
            for (const auto& f : pc.faces()) ++per_flat[f.span_flat];
            per_flat[l.top()] += 1;  // the empty face
            bool ok = true;
            for (int x = 0; x < l.size(); ++x) {
                long want = std::labs(l.mobius_to_top(x).get_si());
                long got = per_flat.count(x) ? per_flat[x] : 0;
                if (want != got) ok = false;
            }
            doc.add_check(tag + "_faces_per_flat_mu", ok);
        }
        doc.add_check(tag + "_colored_f_is_xi", pc.colored_f_character() == xi);
        doc.add_check(tag + "_pseudomanifold", pc.is_pseudomanifold_with_connected_dual());
        auto f = pc.f_vector();
        auto h = pc.h_vector();
        Int hsum = 0;
        for (const Int& x : h) hsum += x;
        doc.add_check(tag + "_h_sums_to_facets", hsum == f[n] && h[0] == 1);
        bool shelling_ok = true;
        std::string detail;
        try {
            BurnsideElement types = pc.shelling_type_character();
            shelling_ok = types == xi_sign;
            if (!shelling_ok) detail = "type sum differs from sign-tensored character";
        } catch (const std::exception& e) {
            shelling_ok = false;
            detail = e.what();
        }
        doc.add_check(tag + "_shelling_types", shelling_ok, detail);
        doc.add_check(tag + "_halfspace_ascent",
                      pc.halfspace_h_character(PositiveComplex::Side::Positive) == xi_sign);
        doc.add_check(tag + "_halfspace_descent",
                      pc.halfspace_h_character(PositiveComplex::Side::Negative) == xi_sign);
    }

    // Poset-level oracles, gated by size.
    Int psize = 0;
    for (int o = 0; o < l.num_orbits(); ++o)
        psize += Int(static_cast<long>(l.orbit_size(o))) * ring.index_of_orbit(o);
    if (psize <= 4000) {
        CosetPoset poset = CosetPoset::build(g, l);
        bool lef_ok = true;
        for (Elem w : g.class_reps()) {
            Int lef = poset.lefschetz_proper(w);
            if ((n - 1) % 2) lef = -lef;
            if (lef != ring.char_value(xi, w)) lef_ok = false;
        }
        doc.add_check("lefschetz_matches_xi", lef_ok);
        doc.add_check("h_vector_two_routes", poset.h_vector_from_chains() == ring.h_vector());
        // Rank-selected characters against the fixed-chain oracle.
        bool rs_ok = true;
        for (SubsetMask R = 1; R < (SubsetMask(1) << n); ++R) {
            BurnsideElement hr = ring.rank_selected_character(R);
            for (Elem w : g.class_reps()) {
                Int lef = poset.lefschetz(w, R);
                if ((std::popcount(R) - 1) % 2) lef = -lef;
                if (lef != ring.char_value(hr, w)) rs_ok = false;
            }
        }
        doc.add_check("rank_selected_vs_lefschetz", rs_ok);
        Int formula = Int(static_cast<unsigned long>(g.order()));
        formula *= formula;
        formula *= factorial(n);
        for (int i = 0; i < n; ++i) formula /= 2;
        doc.add_check("maximal_chain_count", poset.count_maximal_chains() == formula);
    } else {
        doc.add("poset_checks", "note", "skipped: coset poset larger than 4000 elements");
    }

    int rc = emit(doc, opt);
    if (rc != 0) return rc;
    return doc.all_checks_passed() ? 0 : 1;
}

int cmd_series(const Options& opt) {
    if (opt.order > 12) throw SizeCapError("series order capped at 12");
    ReportDocument doc(config_json(opt, "series"));
    BesselDims bd = bessel_dims(opt.order);
    nlohmann::json darr = nlohmann::json::array(), dparr = nlohmann::json::array();
    for (const Int& v : bd.d) darr.push_back(v.get_str());
    for (const Int& v : bd.d_prime) dparr.push_back(v.get_str());
    doc.add("dims", "vector", darr);
    doc.add("dims_unrestricted", "vector", dparr);
    // Descent-pair route agrees with the Bessel route.
    {
        bool ok = true;
        for (int k = 1; k <= std::min(opt.order, 9); ++k) {
            if (descent_pair_count(k, true) != bd.d[k - 1]) ok = false;
            if (descent_pair_count(k, false) != bd.d_prime[k]) ok = false;
        }
        doc.add_check("bessel_vs_descent_pairs", ok);
    }
    int nmax = std::min(opt.order, 8);
    auto series = character_series(nmax);
    for (int k = 1; k <= nmax; ++k)
        doc.add("xi_" + std::to_string(k), "symfunc", symfunc_json(series[k]));
    {
        bool ok = true;
        for (int k = 1; k <= nmax; ++k)
            if (series[k].dim() != Rat(bd.d[k - 1])) ok = false;
        doc.add_check("series_dims_match", ok);
    }
    int rc = emit(doc, opt);
    if (rc != 0) return rc;
    return doc.all_checks_passed() ? 0 : 1;
}

int cmd_svg(const Options& opt) {
    Group g = Group::build(GroupSymbol::parse(opt.group), opt.cap);
    if (g.rank() != 3) throw CLI::ValidationError("--group", "figure rendering needs rank 3");
    Lattice l = Lattice::build(g);
    BurnsideRing ring(g, l);
    GenericVector rho = pick_rho(g, opt, opt.rho_seed);
    PositiveComplex pc = PositiveComplex::build(ring, rho);
    std::string svg = render_rank3_svg(pc);
    if (opt.out.empty()) {
        std::cout << svg;
    } else {
        std::ofstream f(opt.out, std::ios::binary);
        f << svg;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with parabolic cosets and chamber complexes"};
    app.require_subcommand(1);
    app.set_config("--config");

    Options opt;
    const char* env_cap = std::getenv("COSETLAB_CAP");
    if (env_cap) opt.cap = std::strtoull(env_cap, nullptr, 10);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", opt.group, "group symbol (A1.., B2.., D4.., G2, F4)");
        sub->add_option("--rho-mode", opt.rho_mode, "seed|prop75|user");
        sub->add_option("--rho-seed", opt.rho_seed, "seed for the random direction");
        sub->add_option("--rho", opt.rho_coeffs, "weight-basis coefficients, e.g. 1,2/3,4");
        sub->add_option("-n,--order", opt.order, "series truncation order");
        sub->add_option("--format", opt.format, "json|csv|text");
        sub->add_option("--out", opt.out, "output path (default stdout)");
        sub->add_option("--cap", opt.cap, "group order cap");
        sub->add_option("--seeds", opt.seeds, "number of seeds for verification");
    };
    CLI::App* xi = app.add_subcommand("xi", "homology character and its invariants");
    CLI::App* verify = app.add_subcommand("verify", "run the cross-validation suite");
    CLI::App* series = app.add_subcommand("series", "symmetric-function and dimension series");
    CLI::App* svg = app.add_subcommand("svg", "rank-3 stereographic figure");
    for (CLI::App* sub : {xi, verify, series, svg}) add_common(sub);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand(xi)) return cmd_xi(opt);
        if (app.got_subcommand(verify)) return cmd_verify(opt);
        if (app.got_subcommand(series)) return cmd_series(opt);
        if (app.got_subcommand(svg)) return cmd_svg(opt);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const SizeCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedTypeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonGenericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
