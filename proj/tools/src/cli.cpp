#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "io.hpp"
#include "spfc/arthur.hpp"
#include "spfc/bv_duality.hpp"
#include "spfc/squareclass.hpp"
#include "spfc/symplectic.hpp"
#include "spfc/unramified_dual.hpp"
#include "spfc/vanishing.hpp"

namespace spfc::cli {

namespace {

using io::json;

struct Output {
    std::ostream& out;
    bool json_mode = false;

    // Prints `text` (plus newline) or the JSON document, depending on mode.
    void emit(const std::string& text, const json& doc) const {
        if (json_mode) {
            out << doc.dump() << '\n';
        } else {
            out << text << '\n';
        }
    }
};

template <class T, class F>
std::string braced(const std::vector<T>& items, F&& format) {
    std::string s = "{";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) s += ",";
        s += format(items[i]);
    }
    return s + "}";
}

std::string braced_ints(const std::vector<int>& v) {
    return braced(v, [](int x) { return std::to_string(x); });
}

std::string braced_blocks(const std::vector<JordanBlock>& v) {
    return braced(v, [](const JordanBlock& b) { return to_string(b); });
}

std::string braced_triples(const std::vector<ExponentTriple>& v) {
    return braced(v, [](const ExponentTriple& t) {
        return "(" + to_string(t.character) + "," + std::to_string(t.m) + "," + to_string(t.alpha) + ")";
    });
}

json blocks_json(const std::vector<JordanBlock>& v) {
    json a = json::array();
    for (const auto& b : v) a.push_back(io::to_json(b));
    return a;
}

json triples_json(const std::vector<ExponentTriple>& v) {
    json a = json::array();
    for (const auto& t : v) a.push_back(io::to_json(t));
    return a;
}

int emit_partition(const Output& o, const Partition& p) {
    o.emit(to_string(p), {{"result", io::to_json(p)}, {"text", to_string(p)}});
    return kExitOk;
}

int emit_bool(const Output& o, bool value) {
    o.emit(value ? "true" : "false", {{"result", value}});
    return value ? kExitOk : kExitNegative;
}

UnitaryDualPoint load_point(const std::string& path) { return io::point_from_json(io::read_document(path)); }

void add_partition_command(CLI::App& app, const char* name, const char* help, std::string& arg,
                           std::function<int()>& action, std::function<int()> body) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("partition", arg, "Partition, e.g. \"[5^2 4 1]\" or 5,5,4,1")->required();
    cmd->callback([&action, body = std::move(body)] { action = body; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Partition combinatorics for symplectic Fourier-coefficient bounds", "spfc"};
    app.require_subcommand(1);
    app.fallthrough();
    Output o{out};
    app.add_flag("--json", o.json_mode, "Structured JSON output");

    std::function<int()> action;
    std::string partition_arg;

    add_partition_command(app, "collapse", "Sp-collapse of a partition of an even number", partition_arg, action,
                          [&] { return emit_partition(o, sp_collapse(parse_partition(partition_arg))); });
    add_partition_command(app, "expand", "Sp-expansion of a symplectic partition", partition_arg, action,
                          [&] { return emit_partition(o, sp_expand(parse_partition(partition_arg))); });
    add_partition_command(app, "transpose", "Conjugate partition", partition_arg, action,
                          [&] { return emit_partition(o, transpose(parse_partition(partition_arg))); });
    add_partition_command(app, "is-symplectic", "Symplectic partition test", partition_arg, action,
                          [&] { return emit_bool(o, is_symplectic(parse_partition(partition_arg))); });
    add_partition_command(app, "is-special", "Special symplectic partition test", partition_arg, action,
                          [&] { return emit_bool(o, is_special_symplectic(parse_partition(partition_arg))); });
    add_partition_command(app, "bv-dual", "Barbasch-Vogan dual of an odd orthogonal partition", partition_arg, action,
                          [&] { return emit_partition(o, bv_dual(OddOrthogonalPartition(parse_partition(partition_arg)))); });

    // arthur
    std::string file;
    auto* arthur = app.add_subcommand("arthur", "Arthur parameter documents");
    arthur->require_subcommand(1);
    auto add_file_command = [&](CLI::App* parent, const char* name, const char* help, std::function<int()> body) {
        auto* cmd = parent->add_subcommand(name, help);
        cmd->add_option("--file", file, "JSON document, or - for standard input")->required();
        cmd->callback([&action, body = std::move(body)] { action = body; });
        return cmd;
    };
    add_file_command(arthur, "validate", "Check the parameter invariants", [&] {
        auto report = validate(io::parameter_from_json(io::read_document(file)));
        if (report.ok) {
            o.emit("accept", {{"accepted", true}});
            return kExitOk;
        }
        o.emit("reject " + report.violation + ": " + report.detail,
               {{"accepted", false}, {"violation", report.violation}, {"detail", report.detail}});
        return kExitNegative;
    });
    add_file_command(arthur, "partition", "Partition attached to the parameter", [&] {
        return emit_partition(o, psi_partition(io::parameter_from_json(io::read_document(file))).partition());
    });
    add_file_command(arthur, "bound", "Vanishing bound of the parameter", [&] {
        return emit_partition(o, fc_bound(io::parameter_from_json(io::read_document(file))));
    });
    add_file_command(arthur, "local", "Assemble the local data in the document's \"local\" member", [&] {
        auto doc = io::read_document(file);
        auto psi = io::parameter_from_json(doc);
        if (!doc.contains("local")) throw std::invalid_argument("document has no \"local\" member");
        auto assembly = assemble_local_data(psi, io::local_from_json(doc.at("local")));
        auto membership = check_uunr(assembly.point);
        auto orbit = orbit_partition(assembly.point);
        auto type = classify_type(assembly.point);
        std::ostringstream text;
        text << "jord1: " << braced_blocks(assembly.jord1) << '\n'
             << "jord2: " << braced_blocks(assembly.jord2) << '\n'
             << "jord3: " << braced_blocks(assembly.jord3) << '\n'
             << "e: " << braced_triples(assembly.point.e) << '\n'
             << "gl: " << braced_blocks(assembly.point.neg.gl_blocks) << '\n'
             << "orbit: " << to_string(orbit) << '\n'
             << "type: " << to_string(type) << '\n'
             << "membership: "
             << (membership.accepted ? "accept" : "reject " + membership.violated + ": " + membership.detail);
        json mj{{"accepted", membership.accepted}};
        if (!membership.accepted) {
            mj["violated"] = membership.violated;
            mj["detail"] = membership.detail;
        }
        o.emit(text.str(), {{"jord1", blocks_json(assembly.jord1)},
                            {"jord2", blocks_json(assembly.jord2)},
                            {"jord3", blocks_json(assembly.jord3)},
                            {"point", io::to_json(assembly.point)},
                            {"orbit", io::to_json(orbit)},
                            {"type", std::string(to_string(type))},
                            {"membership", mj}});
        return membership.accepted ? kExitOk : kExitNegative;
    });

    // dual
    auto* dual = app.add_subcommand("dual", "Unramified unitary dual data");
    dual->require_subcommand(1);
    int rank = 0;
    auto* enumerate = dual->add_subcommand("enumerate-sn", "Strongly negative Jordan data of rank n");
    enumerate->add_option("--n", rank, "Rank")->required();
    enumerate->callback([&] {
        action = [&] {
            auto all = enumerate_jord_sn(rank);
            std::string text;
            json list = json::array();
            for (const auto& sn : all) {
                if (!text.empty()) text += '\n';
                text += "lambda0=" + braced_ints(sn.lambda0_sizes) + " trivial=" + braced_ints(sn.trivial_sizes);
                list.push_back(io::to_json(sn));
            }
            o.emit(text, {{"n", rank}, {"count", all.size()}, {"data", list}});
            return kExitOk;
        };
    });
    add_file_command(dual, "check", "Unitarity membership test of a point", [&] {
        auto point = load_point(file);
        check_structure(point);
        auto m = check_uunr(point);
        if (m.accepted) {
            o.emit("accept", {{"accepted", true}});
            return kExitOk;
        }
        o.emit("reject " + m.violated + ": " + m.detail,
               {{"accepted", false}, {"violated", m.violated}, {"detail", m.detail}});
        return kExitNegative;
    });
    add_file_command(dual, "orbit", "Orbit partition of a point", [&] {
        return emit_partition(o, orbit_partition(load_point(file)));
    });

    // bound
    std::string bound_type;
    std::vector<int> list;
    bool trace_flag = false;
    auto* bound = app.add_subcommand("bound", "Vanishing bound of types I to IV");
    bound->add_option("--type", bound_type, "I, II, III or IV")->required()->check(CLI::IsMember({"I", "II", "III", "IV"}));
    bound->add_option("--list", list, "Comma-separated m-list (I) or n-list (II)")->delimiter(',');
    bound->add_option("--file", file, "Point document (III, IV)");
    bound->add_flag("--trace", trace_flag, "Print intermediate partitions (III, IV)");
    bound->callback([&] {
        action = [&] {
            VanishingBound vb;
            BoundTrace trace;
            if (bound_type == "I" || bound_type == "II") {
                vb = bound_type == "I" ? bound_type_I(list) : bound_type_II(list);
            } else {
                if (file.empty()) throw std::invalid_argument("--file is required for type " + bound_type);
                auto point = load_point(file);
                vb = bound_type == "III" ? bound_type_III(point, &trace) : bound_type_IV(point, &trace);
            }
            std::string text;
            json steps = json::array();
            if (trace_flag) {
                for (const auto& [name, p] : trace) {
                    text += name + ": " + to_string(p) + '\n';
                    steps.push_back({{"name", name}, {"partition", io::to_json(p)}});
                }
            }
            text += to_string(vb.bound);
            json doc{{"result", io::to_json(vb.bound)}, {"text", to_string(vb.bound)},
                     {"source", std::string(to_string(vb.source))}};
            if (trace_flag) doc["trace"] = steps;
            o.emit(text, doc);
            return kExitOk;
        };
    });

    // verdict
    std::string candidate_arg, bound_arg, mode_arg = "dominance";
    auto* verdict_cmd = app.add_subcommand("verdict", "Decide whether a candidate partition is forced to vanish");
    verdict_cmd->add_option("--candidate", candidate_arg, "Candidate symplectic partition")->required();
    verdict_cmd->add_option("--bound", bound_arg, "Vanishing bound")->required();
    verdict_cmd->add_option("--mode", mode_arg, "dominance or lex");
    verdict_cmd->callback([&] {
        action = [&] {
            auto v = verdict(parse_partition(candidate_arg), parse_partition(bound_arg), parse_verdict_mode(mode_arg));
            o.emit(std::string(to_string(v)), {{"result", std::string(to_string(v))}});
            return v == Verdict::NotDetermined ? kExitNegative : kExitOk;
        };
    });

    // verify-identity
    int max_n = 0, random_count = 0, max_rank = 30;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify-identity", "Check bound = dual of the orbit partition");
    verify->add_option("--n", max_n, "Exhaustive check for every rank up to N")->required()->check(CLI::Range(0, 12));
    verify->add_option("--random", random_count, "Number of random points")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "Seed for the random points");
    verify->add_option("--max-rank", max_rank, "Rank bound for random points")->check(CLI::NonNegativeNumber);
    verify->callback([&] {
        action = [&] {
            auto report = run_identity_campaign(max_n, random_count, seed, max_rank);
            std::string text = "exhaustive " + std::to_string(report.exhaustive_checked) + ", random " +
                               std::to_string(report.random_checked) + ", failures " +
                               std::to_string(report.failures.size());
            json failures = json::array();
            for (const auto& f : report.failures) {
                text += "\nfailure: " + io::to_json(f.point).dump() + " bound " + to_string(f.bound) + " target " +
                        to_string(f.target);
                failures.push_back({{"point", io::to_json(f.point)},
                                    {"bound", io::to_json(f.bound)},
                                    {"target", io::to_json(f.target)}});
            }
            o.emit(text, {{"exhaustive", report.exhaustive_checked},
                          {"random", report.random_checked},
                          {"failures", failures}});
            return report.failures.empty() ? kExitOk : kExitNegative;
        };
    });

    // exponent-identity
    std::vector<int> m_list;
    auto* ident = app.add_subcommand("exponent-identity", "Check the exponent identity for an m-list of length >= 5");
    ident->add_option("--list", m_list, "Comma-separated strictly increasing m-list")->required()->delimiter(',');
    ident->callback([&] {
        action = [&] {
            auto lhs = exponent_identity_lhs(m_list);
            auto rhs = exponent_identity_rhs(m_list);
            bool ok = lhs == rhs;
            o.emit(std::string(ok ? "true" : "false") + "\nlhs: " + to_string(lhs) + "\nrhs: " + to_string(rhs),
                   {{"result", ok}, {"lhs", io::to_json(lhs)}, {"rhs", io::to_json(rhs)}});
            return ok ? kExitOk : kExitNegative;
        };
    });

    // qr-primes
    std::vector<std::int64_t> class_values;
    int count = 1;
    std::int64_t limit = 100000;
    auto* qr = app.add_subcommand("qr-primes", "Odd primes at which every class is a nonzero square");
    qr->add_option("--classes", class_values, "Comma-separated squarefree integers")->required()->delimiter(',');
    qr->add_option("--count", count, "Number of primes")->check(CLI::PositiveNumber);
    qr->add_option("--limit", limit, "Search bound")->check(CLI::PositiveNumber);
    qr->callback([&] {
        action = [&] {
            std::vector<SquareClass> classes;
            for (auto v : class_values) classes.emplace_back(v);
            std::vector<std::int64_t> primes;
            try {
                primes = qr_primes(classes, count, limit);
            } catch (const std::runtime_error& e) {
                o.emit(std::string("insufficient: ") + e.what(), {{"result", nullptr}, {"detail", e.what()}});
                return kExitNegative;
            }
            std::string text;
            for (auto p : primes) text += (text.empty() ? "" : " ") + std::to_string(p);
            o.emit(text, {{"result", primes}});
            return kExitOk;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }
    try {
        return action ? action() : kExitInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace spfc::cli
