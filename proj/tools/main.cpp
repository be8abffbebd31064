#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "topograph/alphabet.hpp"
#include "topograph/homeo.hpp"
#include "topograph/invariants.hpp"
#include "topograph/tgf.hpp"

namespace {

using nlohmann::json;
using namespace topograph;

enum class Format { human, machine, js };

Format parse_format(const std::string& s) {
    if (s == "human") return Format::human;
    if (s == "machine") return Format::machine;
    if (s == "json") return Format::js;
    throw Error("unknown format '" + s + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string file_stem(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
    std::size_t dot = base.find_last_of('.');
    return (dot == std::string::npos) ? base : base.substr(0, dot);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// tol <= 0 means "derive from the bounding box".
TopoGraph load_file(const std::string& path, double tol) {
    std::string text = read_file(path);
    if (ends_with(path, ".paths")) {
        std::vector<Polyline> ps = parse_paths(text);
        double effective = tol > 0 ? tol : default_tolerance(ps);
        return from_polylines(ps, effective, file_stem(path));
    }
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

TopoGraph load_input(const std::string& spec, bool builtin, double tol) {
    return builtin ? topograph::builtin(spec) : load_file(spec, tol);
}

json signature_json(const OrderSignature& sig) {
    json entries = json::object();
    for (const auto& [n, count] : sig.entries) {
        if (count.is_infinite())
            entries[std::to_string(n)] = "inf";
        else
            entries[std::to_string(n)] = count.finite();
    }
    return entries;
}

void print_classes(const std::vector<std::vector<std::string>>& classes, Format format) {
    auto joined = [](const std::vector<std::string>& members) {
        std::string s;
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) s += ' ';
            s += members[i];
        }
        return s;
    };

    switch (format) {
    case Format::human:
        std::cout << classes.size() << " homeomorphism classes:\n";
        for (const auto& members : classes) std::cout << "  {" << joined(members) << "}\n";
        break;
    case Format::machine:
        std::cout << "classes=" << classes.size() << "\n";
        for (std::size_t i = 0; i < classes.size(); ++i)
            std::cout << "class." << i + 1 << "=" << joined(classes[i]) << "\n";
        break;
    case Format::js: {
        json out;
        out["classes"] = classes;
        std::cout << out.dump() << "\n";
        break;
    }
    }
}

void print_signature(const std::string& name, const OrderSignature& sig, Format format) {
    switch (format) {
    case Format::human:
        std::cout << "order signature of " << name << ": " << to_string(sig) << "\n";
        break;
    case Format::machine:
        std::cout << to_string(sig) << "\n";
        break;
    case Format::js: {
        json out;
        out["name"] = name;
        out["signature"] = signature_json(sig);
        std::cout << out.dump() << "\n";
        break;
    }
    }
}

std::string witness_label(const Witness& w) {
    if (w.kind == WitnessKind::depth_k_max) return "M_" + std::to_string(w.depth);
    if (w.kind == WitnessKind::reduced_nonisomorphic) return "reduced forms differ";
    return to_string(w.kind);
}

void print_verdict(const Verdict& verdict, Format format) {
    switch (format) {
    case Format::human:
        if (verdict.homeomorphic) {
            const Isomorphism& iso = *verdict.isomorphism;
            std::cout << "homeomorphic: reduced cores match with circles=" << iso.circle_count
                      << "\n";
            if (!iso.vertex_map.empty()) {
                std::cout << "  vertices:";
                for (const auto& [from, to] : iso.vertex_map) std::cout << " " << from << "->" << to;
                std::cout << "\n";
            }
            if (!iso.edge_map.empty()) {
                std::cout << "  edges:";
                for (const auto& [from, to] : iso.edge_map) std::cout << " " << from << "->" << to;
                std::cout << "\n";
            }
        } else {
            const Witness& w = *verdict.witness;
            std::cout << "not homeomorphic: " << witness_label(w) << ": " << w.lhs << " vs "
                      << w.rhs << "\n";
        }
        break;
    case Format::machine:
        if (verdict.homeomorphic) {
            const Isomorphism& iso = *verdict.isomorphism;
            std::cout << "homeomorphic=true\n";
            std::cout << "circles=" << iso.circle_count << "\n";
            for (const auto& [from, to] : iso.vertex_map)
                std::cout << "vmap." << from << "=" << to << "\n";
            for (const auto& [from, to] : iso.edge_map)
                std::cout << "emap." << from << "=" << to << "\n";
        } else {
            const Witness& w = *verdict.witness;
            std::cout << "homeomorphic=false\n";
            std::cout << "witness=" << to_string(w.kind) << "\n";
            if (w.kind == WitnessKind::depth_k_max) std::cout << "depth=" << w.depth << "\n";
            std::cout << "lhs=" << w.lhs << "\n";
            std::cout << "rhs=" << w.rhs << "\n";
        }
        break;
    case Format::js: {
        json out;
        out["homeomorphic"] = verdict.homeomorphic;
        if (verdict.homeomorphic) {
            const Isomorphism& iso = *verdict.isomorphism;
            out["circles"] = iso.circle_count;
            out["vertex_map"] = iso.vertex_map;
            out["edge_map"] = iso.edge_map;
        } else {
            const Witness& w = *verdict.witness;
            json witness;
            witness["kind"] = to_string(w.kind);
            if (w.kind == WitnessKind::depth_k_max) witness["depth"] = w.depth;
            witness["lhs"] = w.lhs;
            witness["rhs"] = w.rhs;
            out["witness"] = witness;
        }
        std::cout << out.dump() << "\n";
        break;
    }
    }
}

void print_reduced(const ReducedForm& rf, Format format) {
    switch (format) {
    case Format::human:
    case Format::machine:
        std::cout << serialize(rf.core);
        std::cout << "circles=" << rf.circle_count << "\n";
        break;
    case Format::js: {
        json out;
        out["circles"] = rf.circle_count;
        out["core"] = serialize(rf.core);
        std::cout << out.dump() << "\n";
        break;
    }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topological letterform classifier: models strokes as 1-complexes, computes "
                 "point-deletion invariants and decides homeomorphism exactly"};
    app.require_subcommand(1);

    std::string format_name = "human";
    bool use_builtin = false;
    bool with_enye = false;
    double tol = 0.0;
    int max_depth = 2;
    std::vector<std::string> inputs;

    auto add_common = [&](CLI::App* cmd, bool enye_flag) {
        cmd->add_option("--format", format_name, "human, machine or json")
            ->check(CLI::IsMember({"human", "machine", "json"}));
        cmd->add_flag("--builtin", use_builtin, "treat inputs as builtin letter names");
        if (enye_flag) cmd->add_flag("--with-enye", with_enye, "include the letter Ñ");
        cmd->add_option("--tol", tol, "endpoint merge tolerance for .paths files")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* cmd_classify =
        app.add_subcommand("classify", "partition inputs into homeomorphism classes");
    add_common(cmd_classify, true);
    cmd_classify->add_option("inputs", inputs, "letter names or .tgf/.paths files");

    CLI::App* cmd_signature =
        app.add_subcommand("signature", "order signature (point counts per order) of one input");
    add_common(cmd_signature, false);
    cmd_signature->add_option("input", inputs, "letter name or file")->expected(1)->required();

    CLI::App* cmd_distinguish = app.add_subcommand(
        "distinguish", "find the cheapest invariant separating two inputs, or certify "
                       "they are homeomorphic");
    add_common(cmd_distinguish, false);
    cmd_distinguish->add_option("--max-depth", max_depth, "deepest point-deletion bound tried")
        ->check(CLI::Range(0, 4));
    cmd_distinguish->add_option("inputs", inputs, "two letter names or files")
        ->expected(2)
        ->required();

    CLI::App* cmd_reduce =
        app.add_subcommand("reduce", "canonical form: smoothed core plus circle count");
    add_common(cmd_reduce, false);
    cmd_reduce->add_option("input", inputs, "letter name or file")->expected(1)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format format = parse_format(format_name);

        if (cmd_classify->parsed()) {
            std::vector<TopoGraph> graphs;
            if (use_builtin) {
                std::vector<std::string> names =
                    inputs.empty() ? builtin_names(with_enye) : inputs;
                if (!inputs.empty() && with_enye) names.push_back("Ñ");
                for (const std::string& name : names) graphs.push_back(builtin(name));
            } else {
                if (inputs.empty()) throw Error("no inputs given (try --builtin)");
                for (const std::string& path : inputs) graphs.push_back(load_file(path, tol));
            }
            print_classes(classify(graphs), format);
        } else if (cmd_signature->parsed()) {
            TopoGraph g = load_input(inputs[0], use_builtin, tol);
            print_signature(g.name(), order_signature(g), format);
        } else if (cmd_distinguish->parsed()) {
            TopoGraph g = load_input(inputs[0], use_builtin, tol);
            TopoGraph h = load_input(inputs[1], use_builtin, tol);
            print_verdict(distinguish(g, h, max_depth), format);
        } else if (cmd_reduce->parsed()) {
            TopoGraph g = load_input(inputs[0], use_builtin, tol);
            print_reduced(reduce(g), format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
