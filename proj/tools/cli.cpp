#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "formats.hpp"
#include "rkl/diagonal.hpp"
#include "rkl/homogeneity.hpp"
#include "rkl/oracles.hpp"
#include "rkl/predlang.hpp"
#include "rkl/reductions.hpp"

namespace rkl::cli {

namespace {

struct Options {
    std::string out_path;
    std::string tree, sigma, coloring, set, enums, stages;
    bool close = false;
    std::optional<Nat> n, x, max_stage, horizon, e;
    Nat depth = 0;
    Nat bound = 1;
    Nat cap = 1000;
    Nat min_size = 3;
    int color = 0;
    std::string theta0, theta1, phi, tau;
    std::vector<std::string> files;
    std::string kind;
    std::uint64_t seed = 0;
    Nat k = 2;
};

template <class Reader>
auto load(const std::string& path, Reader reader) {
    std::istringstream in(io::slurp(path));
    try {
        return reader(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what(), 0);
    } catch (const NotPrefixClosed& e) {
        throw ParseError(path + ": " + e.what(), 0);
    }
}

FinTree load_tree(const std::string& path, bool close) {
    return load(path, [close](std::istream& in) { return io::read_tree(in, close); });
}
StringFamily load_family(const std::string& path) {
    return load(path, [](std::istream& in) { return io::read_family(in); });
}
PairColoring load_coloring(const std::string& path) {
    return load(path, [](std::istream& in) { return io::read_coloring(in); });
}
StagedEnum load_enum(const std::string& path) {
    return load(path, [](std::istream& in) { return io::read_enum(in); });
}
NatSet load_set(const std::string& path) {
    return load(path, [](std::istream& in) { return io::read_set(in); });
}

std::string join(const NatSet& s) {
    std::string out;
    for (Nat x : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out.empty() ? "{}" : "{" + out + "}";
}

std::string show(const BitString& s) { return s.empty() ? "-" : s.str(); }

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string describe_file(const std::string& path) {
    std::ostringstream o;
    o << path << ": ";
    if (ends_with(path, ".tree")) {
        auto t = load_tree(path, false);
        o << "tree, " << t.size() << " members, horizon " << t.horizon();
    } else if (ends_with(path, ".sigma")) {
        auto f = load_family(path);
        o << "family, " << f.size() << " strings, max length " << f.n()
          << (f.graded() ? ", graded" : ", not graded");
    } else if (ends_with(path, ".color")) {
        auto f = load_coloring(path);
        o << "coloring, horizon " << f.n() << ", " << f.pair_count() << " pairs";
    } else if (ends_with(path, ".enum")) {
        auto e = load_enum(path);
        o << "enumeration, " << e.k() << " indices, " << e.events().size() << " events, max stage "
          << e.max_stage();
    } else if (ends_with(path, ".set")) {
        auto s = load_set(path);
        o << "set, " << s.size() << " elements";
        if (!s.empty()) o << ", max " << s.max();
    } else if (ends_with(path, ".stages")) {
        auto st = load(path, [](std::istream& in) { return io::read_stages(in); });
        o << "stage list, " << st.size() << " entries";
    } else {
        throw ParseError(path + ": unknown file extension", 0);
    }
    return o.str();
}

// Small deterministic fixtures. mt19937_64 output is fixed by the standard,
// and only raw engine output is used here.
std::string generate(const Options& o) {
    std::mt19937_64 rng(o.seed);
    auto bit = [&] { return to_color(static_cast<int>(rng() & 1U)); };
    auto below = [&](Nat bound) { return bound ? static_cast<Nat>(rng() % bound) : 0; };
    auto random_string = [&](Nat len) {
        BitString s;
        for (Nat i = 0; i < len; ++i) s.push_back(bit());
        return s;
    };
    const Nat n = o.n.value_or(8);
    std::ostringstream out;
    if (o.kind == "coloring") {
        io::write_coloring(out, PairColoring::from_function(n, [&](Nat, Nat) { return bit(); }));
    } else if (o.kind == "graded") {
        std::vector<BitString> strings;
        for (Nat len = 1; len <= n; ++len) strings.push_back(random_string(len));
        io::write_family(out, StringFamily::graded_from(strings));
    } else if (o.kind == "family") {
        StringFamily::Members m{random_string(n)};
        for (Nat i = below(n) + 1; i > 0; --i) m.insert(random_string(below(n + 1)));
        io::write_family(out, StringFamily(std::move(m)));
    } else if (o.kind == "tree") {
        FinTree::Members m{random_string(n)};
        for (Nat i = below(4); i > 0; --i) m.insert(random_string(below(n + 1)));
        io::write_tree(out, FinTree::close(m));
    } else if (o.kind == "enum") {
        std::vector<EnumEvent> events;
        for (Nat e = 0; e < o.k; ++e) {
            std::set<Nat> used;
            for (Nat i = below(e + 6); i > 0; --i) {
                Nat x = below(n);
                if (used.insert(x).second) events.push_back({e, below(n) + 1, x});
            }
        }
        io::write_enum(out, StagedEnum(std::move(events)));
    } else if (o.kind == "set") {
        std::vector<Nat> elements;
        for (Nat x = 0; x < n; ++x)
            if (rng() & 1U) elements.push_back(x);
        io::write_set(out, NatSet(std::move(elements)));
    } else {
        throw ParseError("unknown --kind '" + o.kind +
                             "' (coloring, graded, family, tree, enum, set)",
                         0);
    }
    return out.str();
}

void emit(const std::string& data, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << data;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw ParseError("cannot write " + path, 0);
    file << data;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Workbench for Ramsey-type König's lemma reductions at finite scale", "rkl"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    Options o;
    std::function<int(std::ostringstream&)> action;
    int verdict_code = kOk;

    auto output_opt = [&](CLI::App* sub) {
        sub->add_option("-o,--out", o.out_path, "Write data to this file instead of stdout");
    };
    auto tree_opts = [&](CLI::App* sub, bool required) {
        auto* t = sub->add_option("--tree", o.tree, ".tree file");
        if (required) t->required();
        sub->add_flag("--close", o.close, "Prefix-close the tree instead of validating it");
        return t;
    };

    {
        auto* sub = app.add_subcommand("close", "Downward closure of a string family");
        sub->add_option("--sigma", o.sigma, ".sigma file")->required();
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                io::write_tree(data, downward_closure(load_family(o.sigma)));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("tree2color", "Coloring from lex-least tree members");
        tree_opts(sub, true);
        sub->add_option("-n", o.n, "Coloring horizon (default: tree horizon)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto t = load_tree(o.tree, o.close);
                io::write_coloring(data, tree_to_stable_coloring(t, o.n.value_or(t.horizon())));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("sigma2color", "Coloring from shortest long-enough strings");
        sub->add_option("--sigma", o.sigma, ".sigma file")->required();
        sub->add_option("-n", o.n, "Coloring horizon (default: longest string)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto fam = load_family(o.sigma);
                io::write_coloring(data, sigma_to_coloring(fam, o.n.value_or(fam.n())));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("color2sigma", "Graded family read off a coloring");
        sub->add_option("--coloring", o.coloring, ".color file")->required();
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                io::write_family(data, coloring_to_sigma(load_coloring(o.coloring)));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("ce2sigma", "Graded family from a staged tree enumeration");
        sub->add_option("--stages", o.stages, ".stages file")->required();
        sub->add_option("--max-stage", o.max_stage, "Last stage (default: largest listed)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto entries = load(o.stages, [](std::istream& in) { return io::read_stages(in); });
                Nat last = 0;
                for (const auto& en : entries) last = std::max(last, en.stage);
                io::write_family(data, ce_tree_to_sigma(entries, o.max_stage.value_or(last)));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("pi2sigma1", "Sigma-0-1 tree membership at a search bound");
        sub->add_option("--phi", o.phi, "Predicate phi over bit(i), len, y, z")->required();
        sub->add_option("--bound", o.bound, "Search bound for z-hat")->required();
        auto* tau = sub->add_option("--tau", o.tau, "Test a single string");
        auto* depth = sub->add_option("--depth", o.depth, "List confirmed strings up to this length");
        tau->excludes(depth);
        output_opt(sub);
        sub->callback([&, tau, depth] {
            action = [&, tau, depth](std::ostringstream& data) {
                if (tau->count() == depth->count())
                    throw ParseError("pi2sigma1 needs exactly one of --tau or --depth", 0);
                auto phi = pred::as_phi(pred::parse_predicate(o.phi));
                if (tau->count()) {
                    data << (pi2_tree_to_sigma1(phi, BitString::parse(o.tau), o.bound) ? "true" : "false")
                         << '\n';
                    return kOk;
                }
                StringFamily::Members confirmed;
                for (Nat len = 0; len <= o.depth; ++len)
                    for (auto& s : all_strings(len))
                        if (pi2_tree_to_sigma1(phi, s, o.bound)) confirmed.insert(std::move(s));
                io::write_family(data, StringFamily(std::move(confirmed)));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("yoko", "Coloring separating two Pi-0-2 sets covering N");
        sub->add_option("--theta0", o.theta0, "Matrix theta_0(x,m,n)")->required();
        sub->add_option("--theta1", o.theta1, "Matrix theta_1(x,m,n)")->required();
        sub->add_option("-n", o.n, "Coloring horizon")->required();
        sub->add_option("--cap", o.cap, "Cap for the mu-search (default 1000)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto t0 = pred::as_theta(pred::parse_predicate(o.theta0));
                auto t1 = pred::as_theta(pred::parse_predicate(o.theta1));
                io::write_coloring(data, yokoyama_coloring(t0, t1, *o.n, o.cap));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("settree", "Tree of initial segments of a characteristic function");
        sub->add_option("--set", o.set, ".set file")->required();
        sub->add_option("--depth", o.depth, "Length of the longest segment")->required();
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                io::write_tree(data, set_to_path_tree(load_set(o.set), o.depth));
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("diag", "Tree on which no large enumerated set is homogeneous");
        sub->add_option("--enum", o.enums, ".enum file")->required();
        sub->add_option("--depth", o.depth, "Tree horizon")->required();
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto report = build_diagonal_tree(load_enum(o.enums), o.depth);
                io::write_tree(data, report.tree);
                int code = kOk;
                data << "# level count lower-bound\n";
                for (Nat l = 0; l < report.level_counts.size(); ++l) {
                    const Nat floor = l == 0 ? 1 : Nat{1} << (l - 1);
                    const bool ok = 2 * report.level_counts[l] >= (Nat{1} << l);
                    data << "# " << l << ' ' << report.level_counts[l] << ' ' << floor
                         << (ok ? "" : " VIOLATED") << '\n';
                    if (!ok) code = kVerificationFailed;
                }
                for (auto [e, l] : report.triggered) data << "# triggered " << e << ' ' << l << '\n';
                return code;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("search", "Largest homogeneous set of a coloring");
        sub->add_option("--coloring", o.coloring, ".color file")->required();
        sub->add_option("--min-size", o.min_size, "Smallest acceptable size (default 3)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto found = ramsey_search(load_coloring(o.coloring), o.min_size);
                if (!found) {
                    err << "rkl: no homogeneous set with at least " << o.min_size << " elements\n";
                    return kVerificationFailed;
                }
                data << "# color " << to_int(found->first) << '\n';
                io::write_set(data, found->second);
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("path", "Longest path and its pigeonhole homogeneous set");
        tree_opts(sub, true);
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto p = longest_path(load_tree(o.tree, o.close));
                auto [c, h] = path_pigeonhole(p);
                data << "# path " << show(p) << "\n# color " << to_int(c) << '\n';
                io::write_set(data, h);
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("stable", "Horizon-bounded stability evidence per column");
        sub->add_option("--coloring", o.coloring, ".color file")->required();
        sub->add_option("-x", o.x, "Column to check (default: all x < n)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto f = load_coloring(o.coloring);
                data << "# x last_change final_color verdict\n";
                Nat lo = o.x.value_or(0);
                Nat hi = o.x ? *o.x + 1 : f.n();
                for (Nat x = lo; x < hi; ++x) {
                    auto ev = check_stable(f, x);
                    data << x << ' ' << ev.last_change << ' ' << to_int(ev.final_color) << ' '
                         << (ev.stabilized ? "stabilized-within-horizon" : "not-stabilized") << '\n';
                }
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("verify", "Check that a homogeneous set lifts to a path");
        auto* tree = tree_opts(sub, false);
        auto* sigma = sub->add_option("--sigma", o.sigma, ".sigma file");
        tree->excludes(sigma);
        sub->add_option("--coloring", o.coloring, ".color file")->required();
        sub->add_option("--set", o.set, ".set file")->required();
        sub->add_option("--color", o.color, "Color of the homogeneous set")
            ->required()
            ->check(CLI::Range(0, 1));
        sub->add_option("--horizon", o.horizon, "Path horizon (default: min of the largest set element and the tree horizon)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                if (o.tree.empty() == o.sigma.empty())
                    throw ParseError("verify needs exactly one of --tree or --sigma", 0);
                std::optional<FinTree> tree_src;
                std::optional<StringFamily> family_src;
                if (!o.tree.empty()) tree_src = load_tree(o.tree, o.close);
                else family_src = load_family(o.sigma);
                auto f = load_coloring(o.coloring);
                auto h = load_set(o.set);
                const Color c = to_color(o.color);

                ReductionSource source = tree_src ? ReductionSource(*tree_src) : ReductionSource(*family_src);
                FinTree t = tree_src ? *tree_src : downward_closure(*family_src);
                auto verdict = verify_reduction(source, f, h, c);
                int code = kOk;
                data << "reduction: " << h.size() << " elements checked, "
                     << verdict.counterexamples.size() << " counterexamples\n";
                for (Nat y : verdict.counterexamples) {
                    data << "counterexample y=" << y << '\n';
                    code = kVerificationFailed;
                }
                Nat horizon = o.horizon.value_or(h.empty() ? 0 : std::min(h.max(), t.horizon()));
                if (auto w = is_homog_path(h, t, horizon)) {
                    data << "path: homogeneous with color " << to_int(w->color) << ", witness "
                         << show(w->witnesses.front()) << " at horizon " << horizon << '\n';
                } else {
                    data << "path: not homogeneous for any member of length >= " << horizon << '\n';
                    code = kVerificationFailed;
                }
                return code;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("dnr", "Fixed-point-free check against the diagonal tree");
        sub->add_option("--set", o.set, ".set file (homogeneous for a path)")->required();
        sub->add_option("--enum", o.enums, ".enum file")->required();
        sub->add_option("--depth", o.depth, "Diagonal tree horizon")->required();
        sub->add_option("-e", o.e, "Only report this index");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                auto h = load_set(o.set);
                auto enums = load_enum(o.enums);
                auto report = build_diagonal_tree(enums, o.depth);
                auto verdicts = check_fpf(h, enums, report);
                int code = kOk;
                data << "# e verdict witness g(e) W_e\n";
                for (const auto& v : verdicts) {
                    if (o.e && v.e != *o.e) continue;
                    data << v.e << ' ' << to_string(v.kind) << ' '
                         << (v.witness ? std::to_string(*v.witness) : "-") << ' '
                         << (h.size() >= v.e + 3 ? join(dnr_g(h, v.e)) : "-") << ' '
                         << join(enums.final_set(v.e)) << '\n';
                    if (v.kind == FpfVerdict::Kind::fixed_point) code = kVerificationFailed;
                }
                return code;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("info", "Describe input files");
        sub->add_option("files", o.files, "Files to describe");
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                if (o.files.empty()) {
                    data << "rkl workbench\nformats: .tree .sigma .color .enum .set .stages\n"
                         << "subcommands:";
                    for (const auto* s : app.get_subcommands([](CLI::App*) { return true; })) data << ' ' << s->get_name();
                    data << '\n';
                }
                for (const auto& f : o.files) data << describe_file(f) << '\n';
                return kOk;
            };
        });
    }
    {
        auto* sub = app.add_subcommand("gen", "Generate a random fixture");
        sub->add_option("--kind", o.kind, "coloring, graded, family, tree, enum or set")->required();
        sub->add_option("-n", o.n, "Size parameter (default 8)");
        sub->add_option("--k", o.k, "Number of indices for --kind enum (default 2)");
        sub->add_option("--seed", o.seed, "Random seed (default 0)");
        output_opt(sub);
        sub->callback([&] {
            action = [&](std::ostringstream& data) {
                data << generate(o);
                return kOk;
            };
        });
    }

    std::vector<const char*> argv{"rkl"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
    }

    try {
        std::ostringstream data;
        verdict_code = action(data);
        emit(data.str(), o.out_path, out);
        return verdict_code;
    } catch (const NotHomogeneous& e) {
        err << "rkl: verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const NotHomogeneousForColoring& e) {
        err << "rkl: verification failed: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const Error& e) {
        err << "rkl: error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

} // namespace rkl::cli
