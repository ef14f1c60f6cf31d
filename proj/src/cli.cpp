#include "oredet/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "oredet/cdsk.hpp"
#include "oredet/errors.hpp"
#include "oredet/generator.hpp"
#include "oredet/harness.hpp"
#include "oredet/matrix_io.hpp"

namespace oredet {

using nlohmann::json;

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("--majorant: bad integer '" + item + "' in " + what);
        }
    }
    return out;
}

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ", ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

json det_json(const DieudonneDet& d) {
    return {{"det1", d.det1.to_string()}, {"d", d.d.is_finite() ? json(d.d.value()) : json("-inf")}};
}

json order_json(OrderValue v) { return v.is_finite() ? json(v.value()) : json("-inf"); }

struct Options {
    std::string file = "-";
    bool as_json = false;
    std::string majorant;
    GeneratorConfig gen;
    std::string target;
    std::size_t count = 1;
    std::size_t threads = 0;
};

OreMatrix load(const Options& o) {
    if (o.file == "-") return parse_matrix_document(std::cin).matrix;
    return read_matrix_file(o.file).matrix;
}

int cmd_det(const Options& o, std::ostream& out) {
    DieudonneDet d = dieudonne_det(load(o));
    if (o.as_json)
        out << det_json(d).dump(2) << '\n';
    else
        out << d.to_string() << '\n';
    return exit_code::ok;
}

int cmd_tord(const Options& o, std::ostream& out) {
    OrderValue t = total_order(load(o));
    if (o.as_json)
        out << json{{"tord", order_json(t)}}.dump(2) << '\n';
    else
        out << "tord = " << t << '\n';
    return exit_code::ok;
}

int cmd_dd(const Options& o, std::ostream& out) {
    OreMatrix m = load(o);
    OrderValue dd = degeneracy_degree(m);
    if (o.as_json)
        out << json{{"dd", dd.value()}, {"tord", total_order(m).value()}, {"det", det_json(dieudonne_det(m))}}.dump(2)
            << '\n';
    else
        out << "dd = " << dd << '\n';
    return exit_code::ok;
}

int cmd_majorant(const Options& o, std::ostream& out) {
    OreMatrix m = load(o);
    Majorant maj = optimal_majorant(m);
    if (o.as_json) {
        json j = majorant_to_json(maj);
        j["tord"] = maj.weight();
        out << j.dump(2) << '\n';
    } else {
        out << maj.to_string() << "\ntord = " << maj.weight() << '\n';
    }
    return exit_code::ok;
}

int cmd_charmat(const Options& o, std::ostream& out) {
    OreMatrix m = load(o);
    Majorant maj = o.majorant.empty() ? optimal_majorant(m) : parse_majorant_arg(o.majorant);
    CharMatrix c = characteristic_matrix(m, maj);
    RatFunc det = det_bareiss(c.C);
    const bool optimal = c.total_power == total_order(m);
    if (o.as_json) {
        json j{{"majorant", majorant_to_json(maj)},
               {"optimal", optimal},
               {"C", kmatrix_to_json(c.C)},
               {"total_power", c.total_power},
               {"det", det.to_string()}};
        out << j.dump(2) << '\n';
    } else {
        out << "majorant: " << maj.to_string() << (optimal ? " (optimal)" : " (not optimal)") << '\n'
            << "C = " << to_string(c.C) << '\n';
        if (det.is_zero())
            out << "det = 0\n";
        else
            out << "det = " << det << " * lambda^" << c.total_power << '\n';
    }
    return exit_code::ok;
}

int cmd_cdsk(const Options& o, std::ostream& out) {
    Dd1Certificate c = cdsk_reduce(load(o));
    if (o.as_json) {
        out << certificate_to_json(c).dump(2) << '\n';
        return exit_code::ok;
    }
    const UniformForm& u = c.uniform;
    out << "tord = " << c.tord << ", d = " << c.det.d << ", dd = 1\n"
        << "optimal majorant: " << c.majorant.to_string() << '\n'
        << "uniform: N = " << u.N << ", h = " << u.h << ", row pads (" << join(u.row_pads) << "), column pads ("
        << join(u.col_pads) << ")\n"
        << "M' = " << u.Mp.to_string() << '\n'
        << "A = " << to_string(c.split.A) << '\n'
        << "B = " << to_string(c.split.B) << '\n'
        << "relation c = (" << join(c.relation.c) << "), pivot row " << c.relation.pivot << '\n';
    if (c.swapped_row != 0) out << "swapped rows 0 and " << c.swapped_row << " (sign -1)\n";
    out << "M'' = " << c.m2.to_string() << '\n'
        << "M''_char = " << to_string(c.m2_char) << '\n'
        << "det(M''_i) = (" << join(c.summands) << "), each divisible by c_1 = " << c.c[0] << '\n'
        << "det(M''_char) = " << c.char_det << " = c_1 * " << (c.swap_sign < 0 ? "(-D)" : "D") << '\n'
        << "D = " << c.D << " (in Q[x])\n";
    return exit_code::ok;
}

int cmd_gen(const Options& o, std::ostream& out) {
    GeneratorConfig g = o.gen;
    if (!o.target.empty()) g.target = parse_target(o.target);
    json docs = json::array();
    for (std::size_t i = 0; i < o.count; ++i) {
        GeneratorConfig gi = g;
        gi.seed = g.seed + i;
        GeneratedInstance inst = random_matrix(gi);
        json meta{{"seed", gi.seed},
                  {"target", to_string(gi.target)},
                  {"dd", inst.dd ? json(*inst.dd) : json(nullptr)},
                  {"attempts", inst.attempts}};
        docs.push_back(matrix_to_json(inst.matrix, meta));
    }
    out << (o.count == 1 ? docs[0] : docs).dump(2) << '\n';
    return exit_code::ok;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    HarnessConfig h;
    h.count = o.count;
    h.seed = o.gen.seed;
    h.generator = o.gen;
    if (!o.target.empty()) h.target = parse_target(o.target);
    h.threads = o.threads;
    HarnessSummary s = run_harness(h);

    for (const auto& r : s.instances) {
        if (!r.generation_error.empty()) err << "instance " << r.index << " (seed " << r.seed << "): " << r.generation_error << '\n';
        if (r.failures.empty()) continue;
        err << "FAIL instance " << r.index << " (seed " << r.seed << ", target " << to_string(r.target) << ")\n";
        for (const auto& f : r.failures) err << "  " << f << '\n';
        if (r.matrix) err << "  matrix: " << matrix_to_json(*r.matrix, {{"seed", r.seed}}).dump() << '\n';
    }

    if (o.as_json) {
        json hist = json::object();
        for (auto [dd, cnt] : s.dd_histogram) hist[std::to_string(dd)] = cnt;
        out << json{{"instances", s.instances.size()},
                    {"singular", s.singular},
                    {"theorem_checked", s.theorem_checked},
                    {"certified_dd1", s.certified},
                    {"dd_histogram", hist},
                    {"generation_failures", s.generation_failures},
                    {"failures", s.failures}}
                   .dump(2)
            << '\n';
    } else {
        out << "instances: " << s.instances.size() << ", nonsingular checked: " << s.theorem_checked
            << ", singular: " << s.singular << ", dd=1 certified: " << s.certified << '\n';
        out << "dd histogram:";
        for (auto [dd, cnt] : s.dd_histogram) out << ' ' << dd << ':' << cnt;
        out << '\n';
        if (s.generation_failures) out << "generation failures: " << s.generation_failures << '\n';
        out << s.failures << " failures\n";
    }
    return s.ok() ? exit_code::ok : exit_code::verification_failure;
}

}  // namespace

Majorant parse_majorant_arg(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos || s.find(';', semi + 1) != std::string::npos)
        throw InputError("--majorant: expected 'N1,..,Nn;h1,..,hn', got '" + s + "'");
    Majorant m{parse_int_list(s.substr(0, semi), "N"), parse_int_list(s.substr(semi + 1), "h")};
    if (m.N.size() != m.h.size() || m.N.empty()) throw InputError("--majorant: N and h must have the same nonzero length");
    return m;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dieudonne determinants, majorants and dd=1 certificates for matrices of differential operators",
                 "oredet"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", o.file, "matrix JSON file ('-' for stdin)");
        sub->add_flag("--json", o.as_json, "JSON output");
    };
    auto add_gen = [&](CLI::App* sub) {
        sub->add_option("--n", o.gen.n, "matrix size")->check(CLI::PositiveNumber);
        sub->add_option("--max-ord", o.gen.max_ord, "maximum entry order")->check(CLI::NonNegativeNumber);
        sub->add_option("--max-deg", o.gen.max_deg, "maximum coefficient degree")->check(CLI::NonNegativeNumber);
        sub->add_option("--max-num", o.gen.max_num, "coefficient numerator bound")->check(CLI::PositiveNumber);
        sub->add_option("--max-den", o.gen.max_den, "coefficient denominator bound")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.gen.seed, "random seed");
        sub->add_option("--count", o.count, "number of instances")->check(CLI::PositiveNumber);
        sub->add_option("--target", o.target, "any | dd0 | dd1");
        sub->add_flag("--json", o.as_json, "JSON output");
    };

    std::map<std::string, CLI::App*> subs;
    for (const char* name : {"det", "tord", "dd", "majorant", "charmat", "cdsk"}) {
        subs[name] = app.add_subcommand(name);
        add_file(subs[name]);
    }
    subs["det"]->description("Dieudonne determinant det_1 * lambda^d");
    subs["tord"]->description("total order (maximum-weight assignment of entry orders)");
    subs["dd"]->description("degeneracy degree tord - d");
    subs["majorant"]->description("canonical optimal majorant");
    subs["charmat"]->description("characteristic matrix and its determinant");
    subs["charmat"]->add_option("--majorant", o.majorant, "N1,..,Nn;h1,..,hn (default: optimal)");
    subs["cdsk"]->description("certified dd = 1 reduction showing det_1 in Q[x]");
    subs["gen"] = app.add_subcommand("gen", "seeded random matrix generator");
    add_gen(subs["gen"]);
    subs["check"] = app.add_subcommand("check", "batch verification harness");
    add_gen(subs["check"]);
    subs["check"]->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    o.count = 1;
    subs["check"]->preparse_callback([&](std::size_t) { o.count = 100; });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_code::input_error;
    }

    try {
        if (*subs["det"]) return cmd_det(o, out);
        if (*subs["tord"]) return cmd_tord(o, out);
        if (*subs["dd"]) return cmd_dd(o, out);
        if (*subs["majorant"]) return cmd_majorant(o, out);
        if (*subs["charmat"]) return cmd_charmat(o, out);
        if (*subs["cdsk"]) return cmd_cdsk(o, out);
        if (*subs["gen"]) return cmd_gen(o, out);
        if (*subs["check"]) return cmd_check(o, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << '\n';
        return exit_code::precondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::verification_failure;
    }
    return exit_code::input_error;
}

}  // namespace oredet
