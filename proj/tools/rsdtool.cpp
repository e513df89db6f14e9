// rsdtool: classify and probe regular-singular decompositions of A^n,
// A = k((t)), from module description files. Batch-oriented; every
// randomized command takes an explicit seed. --machine restricts output to
// deterministic `key = value` records.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rsd/rsd.hpp"

using namespace rsd;

namespace {

struct Report {
    bool machine = false;
    std::ostringstream out;

    void kv(const std::string& key, const std::string& value) {
        out << key << " = " << value << "\n";
    }
    void note(const std::string& text) {
        if (!machine) out << "note: " << text << "\n";
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RSDecomposition<Rat> load_rsd(const std::string& path) {
    return rsd_from_file(parse_module_file<Rat>(read_file(path)));
}

std::string vector_list(const Mat<Rat>& cols) {
    std::string out = "[";
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        if (j) out += "; ";
        out += cols.col(j).str();
    }
    return out + "]";
}

std::string decomposition_string(const ModuleType& t) {
    std::string out;
    auto add = [&](const char* name, std::size_t mult) {
        if (mult == 0) return;
        if (!out.empty()) out += " + ";
        out += name;
        out += "^" + std::to_string(mult);
    };
    add("A0", t.k);
    add("Ar", t.r);
    add("A1", t.l);
    return out.empty() ? "0" : out;
}

Irreducible parse_irreducible(const std::string& s) {
    if (s == "A0") return Irreducible::A0;
    if (s == "Ar") return Irreducible::Ar;
    if (s == "A1") return Irreducible::A1;
    throw std::invalid_argument("irreducible must be one of A0, Ar, A1");
}

void emit_type(Report& rep, const ModuleType& t) {
    rep.kv("type", t.str());
    rep.kv("orbit_index", std::to_string(orbit_index(t)));
    rep.kv("decomposition", decomposition_string(t));
}

int run(std::vector<std::string> raw_args) {
    CLI::App app{"regular-singular decompositions over the Laurent series field"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "flat key = value output only");

    std::string file, file2, vector_text, dump_path, which = "pair";
    std::uint64_t trials = 0, seed = 0, prime = 0;
    std::size_t dim = 0;
    std::string irr_i, irr_j;
    std::size_t tk = 0, tr = 0, tl = 0;

    auto* c_classify = app.add_subcommand("classify", "orbit type of a decomposition");
    c_classify->add_option("file", file)->required();
    c_classify->add_option("--dump", dump_path, "write the canonical module file");

    auto* c_decompose = app.add_subcommand("decompose", "certified block decomposition");
    c_decompose->add_option("file", file)->required();

    auto* c_iso = app.add_subcommand("isomorphic", "decide isomorphism, emit a witness");
    c_iso->add_option("file1", file)->required();
    c_iso->add_option("file2", file2)->required();

    auto* c_apply = app.add_subcommand("apply-p", "apply the projection to a vector");
    c_apply->add_option("file", file)->required();
    c_apply->add_option("vector", vector_text)->required();

    auto* c_vrb = app.add_subcommand("verify-rb", "randomized Rota-Baxter relation check");
    c_vrb->add_option("--random", trials)->required();
    c_vrb->add_option("--seed", seed)->required();
    c_vrb->add_option("--prime", prime, "work over F_p instead of Q");

    auto* c_vmod = app.add_subcommand("verify-module", "randomized module axiom check");
    c_vmod->add_option("file", file)->required();
    c_vmod->add_option("--random", trials)->required();
    c_vmod->add_option("--seed", seed)->required();

    auto* c_orbits = app.add_subcommand("count-orbits", "number of orbit classes");
    c_orbits->add_option("n", dim)->required();

    auto* c_classes = app.add_subcommand("count-classes", "finitely generated submodule classes");
    c_classes->add_option("n", dim)->required();

    auto* c_hom = app.add_subcommand("hom", "Hom space between irreducibles");
    c_hom->add_option("i", irr_i)->required();
    c_hom->add_option("j", irr_j)->required();

    auto* c_end = app.add_subcommand("endalg", "endomorphism algebra of a type");
    c_end->add_option("k", tk)->required();
    c_end->add_option("r", tr)->required();
    c_end->add_option("l", tl)->required();

    auto* c_stab = app.add_subcommand("stabilizer", "stabilizer group descriptor");
    c_stab->add_option("k", tk)->required();
    c_stab->add_option("r", tr)->required();
    c_stab->add_option("l", tl)->required();
    c_stab->add_option("--which", which)->check(CLI::IsMember({"pair", "module"}));

    auto* c_fiber = app.add_subcommand("fiber", "fiber of the pair-to-module map");
    c_fiber->add_option("k", tk)->required();
    c_fiber->add_option("r", tr)->required();
    c_fiber->add_option("l", tl)->required();

    auto* c_norm = app.add_subcommand("normalize", "unit frame of the singular part");
    c_norm->add_option("file", file)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(raw_args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    rep.machine = machine;

    try {
        if (c_classify->parsed()) {
            auto rsd = load_rsd(file);
            emit_type(rep, rsd.type());
            rep.note("the multiplicity triple (k,r,l) of (A,0), (A,P), (A,Id) is a complete "
                     "isomorphism invariant; orbits in dimension n are the triples with k+r+l=n");
            if (!dump_path.empty()) {
                std::ofstream outf(dump_path);
                outf << render_module_file(rsd);
                rep.kv("dumped", dump_path);
            }
        } else if (c_decompose->parsed()) {
            auto rsd = load_rsd(file);
            auto parts = rsd_decompose(rsd);
            emit_type(rep, rsd.type());
            rep.kv("m_divisible", vector_list(parts.m_div));
            rep.kv("m_free", parts.m_free.str());
            rep.kv("v0", vector_list(parts.v0));
            rep.kv("n_divisible", vector_list(parts.n_div));
            rep.kv("n_free", vector_list(parts.n_free));
            rep.note("V = M~ (+) V0 (+) N~ with V0 = A M_f = A N_f; M = M~ (+) M_f and "
                     "N = N~ (+) N_f");
        } else if (c_iso->parsed()) {
            auto r1 = load_rsd(file);
            auto r2 = load_rsd(file2);
            bool iso = are_isomorphic(r1, r2);
            rep.kv("type_left", r1.type().str());
            rep.kv("type_right", r2.type().str());
            rep.kv("isomorphic", iso ? "true" : "false");
            if (auto w = iso_witness(r1, r2)) rep.kv("witness", "[" + w->str() + "]");
            rep.note("two decompositions are isomorphic exactly when their types coincide");
        } else if (c_apply->parsed()) {
            auto rsd = load_rsd(file);
            Vec<Rat> v = parse_vector_text<Rat>(vector_text);
            Vec<Rat> pv = rsd.apply_p(v);
            rep.kv("input", v.str());
            rep.kv("result", pv.str());
            rep.kv("complement", (v - pv).str());
            rep.note("result lies in M, complement in N; the projection is idempotent");
        } else if (c_vrb->parsed()) {
            std::uint64_t violations = 0;
            if (prime != 0) {
                Fp::set_modulus(prime);
                Rng rng(seed);
                for (std::uint64_t i = 0; i < trials; ++i) {
                    auto x = random_scalar<Fp>(rng, -6, 6, 3, 2);
                    auto y = random_scalar<Fp>(rng, -6, 6, 3, 2);
                    if (!verify_rb_relation(x, y)) ++violations;
                }
                rep.kv("field", Fp::field_name());
            } else {
                Rng rng(seed);
                for (std::uint64_t i = 0; i < trials; ++i) {
                    auto x = random_scalar<Rat>(rng, -6, 6, 3, 2);
                    auto y = random_scalar<Rat>(rng, -6, 6, 3, 2);
                    if (!verify_rb_relation(x, y)) ++violations;
                }
                rep.kv("field", Rat::field_name());
            }
            rep.kv("trials", std::to_string(trials));
            rep.kv("seed", std::to_string(seed));
            rep.kv("violations", std::to_string(violations));
            rep.note("P(x)P(y) = P(P(x)y) + P(xP(y)) - P(xy): the projection onto k[[t]] is a "
                     "Rota-Baxter operator of weight -1");
            if (violations > 0) {
                std::cout << rep.out.str();
                return 1;
            }
        } else if (c_vmod->parsed()) {
            auto rsd = load_rsd(file);
            Rng rng(seed);
            std::uint64_t violations = 0;
            for (std::uint64_t i = 0; i < trials; ++i) {
                auto a = random_scalar<Rat>(rng, -4, 4, 2, 1);
                auto x = random_vec<Rat>(rng, rsd.ambient(), -4, 4, 2, 1);
                if (!verify_module_axiom(rsd, a, x)) ++violations;
            }
            rep.kv("type", rsd.type().str());
            rep.kv("trials", std::to_string(trials));
            rep.kv("seed", std::to_string(seed));
            rep.kv("violations", std::to_string(violations));
            rep.kv("ok", violations == 0 ? "true" : "false");
            rep.note("P(a) p(x) = p(P(a) x + a p(x) - a x) holds for every a and x");
            if (violations > 0) {
                std::cout << rep.out.str();
                return 1;
            }
        } else if (c_orbits->parsed()) {
            rep.kv("n", std::to_string(dim));
            rep.kv("orbits", std::to_string(count_orbits(dim)));
            rep.kv("enumerated", std::to_string(enumerate_types(dim).size()));
            rep.note("orbit classes are the triples (k,r,l) with k+r+l = n, giving "
                     "(n+2)(n+1)/2 of them");
        } else if (c_classes->parsed()) {
            rep.kv("n", std::to_string(dim));
            rep.kv("classes", std::to_string(count_fractional_classes(dim)));
            rep.note("a finitely generated O-submodule of A^n is free and classified by its "
                     "rank, giving n+1 classes");
        } else if (c_hom->parsed()) {
            auto d = hom_descriptor(parse_irreducible(irr_i), parse_irreducible(irr_j));
            rep.kv("hom", d.str());
            rep.note("Hom vanishes between distinct irreducibles; End(A0) = End(A1) = A and "
                     "End(Ar) = k");
        } else if (c_end->parsed()) {
            ModuleType t{tk, tr, tl};
            rep.kv("type", t.str());
            rep.kv("end", end_descriptor(t).str());
            rep.note("End(A0^k (+) A1^l (+) Ar^r) = M(kxk,A) x M(lxl,A) x M(rxr,k)");
        } else if (c_stab->parsed()) {
            ModuleType t{tk, tr, tl};
            rep.kv("type", t.str());
            auto scope = which == "pair" ? StabilizerScope::pair : StabilizerScope::module_only;
            rep.kv("stabilizer", stabilizer_descriptor(t, scope).str());
            if (scope == StabilizerScope::pair)
                rep.note("the stabilizer of the pair (M, N) is GL(k,A) x GL(l,A) x GL(r,k)");
            else
                rep.note("the stabilizer of M alone is block triangular along the flag "
                         "M~ <= AM <= V, with GL(r,O) in the lattice block");
        } else if (c_fiber->parsed()) {
            ModuleType t{tk, tr, tl};
            auto f = fiber_descriptor(t);
            rep.kv("type", t.str());
            rep.kv("fiber", f.quotient.str());
            rep.kv("flag_type", "(" + std::to_string(f.flag_type[0]) + "," +
                                    std::to_string(f.flag_type[1]) + "," +
                                    std::to_string(f.flag_type[2]) + ")");
            rep.kv("bundle_fiber", f.bundle_fiber.str());
            rep.note("the pairs completing a fixed M form the quotient of its stabilizer by "
                     "the pair stabilizer; over flags the orbit fibers into affine "
                     "Grassmannians GL(r,A)/GL(r,O)");
        } else if (c_norm->parsed()) {
            auto rsd = load_rsd(file);
            const Mat<Rat>& phi = normalize_singular(rsd);
            rep.kv("type", rsd.type().str());
            rep.kv("unit_frame", "[" + phi.str() + "]");
            rep.note("phi lies in GL(r,O) and carries t^-1 e_i to the normalized "
                     "k[t^-1]-basis of N_f in lattice coordinates");
        }
    } catch (const DomainError& e) {
        std::cout << "error = " << e.name() << "\n";
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cout << "error = ParseError\n";
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << "error = InvalidArgument\n";
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    std::cout << rep.out.str();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    // CLI11 consumes arguments in reverse order
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    return run(std::move(args));
}
