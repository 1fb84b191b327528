#ifndef DRAWINV_CLI_HPP
#define DRAWINV_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "drawinv/cohomology.hpp"
#include "drawinv/io.hpp"
#include "drawinv/planarity.hpp"
#include "drawinv/tverberg.hpp"

namespace drawinv {

namespace cli_detail {

using nlohmann::json;

inline json json_header(const std::string& command) {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

inline json witness_terms_json(const std::vector<std::pair<int, EdgeId>>& terms) {
    json arr = json::array();
    for (const auto& [a, e] : terms) {
        json t;
        t["vertex"] = a;
        t["edge"] = {e[0], e[1]};
        arr.push_back(t);
    }
    return arr;
}

inline json cochain_json(const Cochain& nu) {
    bool unordered = nu.index->kind == IndexKind::graph_kstar ||
                     nu.index->kind == IndexKind::hyper_kstar;
    bool dashed = detail::max_vertex(*nu.index) > 9;
    json arr = json::array();
    for (std::size_t i = 0; i < nu.index->entries.size(); ++i) {
        std::string key;
        key += unordered ? '{' : '(';
        for (std::size_t j = 0; j < nu.index->entries[i].size(); ++j) {
            if (j) key += ',';
            key += cell_to_string(nu.index->entries[i][j], dashed);
        }
        key += unordered ? '}' : ')';
        arr.push_back({{"entry", key}, {"value", nu.coeffs[i].get_str()}});
    }
    return arr;
}

inline std::string violation_text(const GeneralPositionViolation& v) {
    switch (v.kind) {
        case GeneralPositionViolation::Kind::duplicate_points:
            return "duplicate points at " + point_to_string(v.points[0]);
        case GeneralPositionViolation::Kind::collinear_triple:
            return "collinear triple " + point_to_string(v.points[0]) + " | " +
                   point_to_string(v.points[1]) + " | " + point_to_string(v.points[2]);
        case GeneralPositionViolation::Kind::concurrent_segments:
            return "three segments share the interior point " + point_to_string(v.common);
    }
    return "";
}

inline std::string partition_blocks_text(const Partition& p) {
    return partition_to_string(p);
}

}  // namespace cli_detail

/// Runs one CLI command; returns the process exit status (0 = success,
/// 1 = negative verdict, 2 = bad input).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::json;
    CLI::App app{"invariants of piecewise-linear graph drawings in the plane"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // planarity
    std::string planarity_path, ordering_csv;
    bool want_witness = false, want_certificate = false;
    auto* planarity_cmd = app.add_subcommand("planarity", "Hanani-Tutte graph planarity");
    planarity_cmd->add_option("graph", planarity_path, "graph file")->required();
    planarity_cmd->add_option("--ordering", ordering_csv, "vertex ordering, comma separated");
    planarity_cmd->add_flag("--witness", want_witness, "print the solution assignment");
    planarity_cmd->add_flag("--certificate", want_certificate,
                            "print an inconsistent row combination");

    // planarity-hyper
    std::string hyper_path;
    auto* hyper_cmd =
        app.add_subcommand("planarity-hyper", "2-hypergraph planarity");
    hyper_cmd->add_option("hypergraph", hyper_path, "hypergraph file")->required();
    hyper_cmd->add_flag("--witness", want_witness, "print the solution assignment");
    hyper_cmd->add_flag("--certificate", want_certificate,
                        "print an inconsistent row combination");

    // vk-number / radon-number / check-drawing / ttw
    std::string drawing_path;
    auto* vk_cmd = app.add_subcommand("vk-number", "van Kampen number of a drawing");
    vk_cmd->add_option("drawing", drawing_path, "drawing file")->required();
    auto* radon_cmd = app.add_subcommand("radon-number", "Radon number of a K4 drawing");
    radon_cmd->add_option("drawing", drawing_path, "drawing file")->required();
    auto* check_cmd = app.add_subcommand("check-drawing", "general-position certificate");
    check_cmd->add_option("drawing", drawing_path, "drawing file")->required();
    auto* ttw_cmd =
        app.add_subcommand("ttw", "topological Tverberg witness for a K7 drawing");
    ttw_cmd->add_option("drawing", drawing_path, "drawing file")->required();

    // cocycle
    std::string ring_name = "gf2";
    int rfold = 2;
    auto* cocycle_cmd = app.add_subcommand("cocycle", "intersection cocycle of a drawing");
    cocycle_cmd->add_option("drawing", drawing_path, "drawing file")->required();
    cocycle_cmd->add_option("--ring", ring_name, "gf2 or z")
        ->check(CLI::IsMember({"gf2", "z"}));
    cocycle_cmd->add_option("--r", rfold, "tuple size for the r-fold cocycle (hyper hosts)");

    // coboundary-span
    std::string host_path, cochain_path;
    std::vector<std::string> span_drawings;
    bool hyper_host = false;
    auto* span_cmd =
        app.add_subcommand("coboundary-span", "decide coboundary-span membership");
    span_cmd->add_option("--host", host_path, "graph or hypergraph file")->required();
    span_cmd->add_flag("--hyper", hyper_host, "host file is a 2-hypergraph");
    span_cmd->add_option("--cochain", cochain_path, "cochain dump to test");
    span_cmd->add_option("drawings", span_drawings, "two drawings; tests their difference")
        ->expected(0, 2);
    span_cmd->add_option("--ring", ring_name, "gf2 or z")
        ->check(CLI::IsMember({"gf2", "z"}));
    span_cmd->add_option("--r", rfold, "tuple size for r-fold cochains");
    span_cmd->add_flag("--witness", want_witness, "print the witness combination");

    // tverberg
    std::string points_path;
    bool count_only = false;
    int r_param = 3;
    auto* tverberg_cmd = app.add_subcommand("tverberg", "Tverberg partitions of 3r-2 points");
    tverberg_cmd->add_option("points", points_path, "point list file")->required();
    tverberg_cmd->add_option("--r", r_param, "number of blocks")->required();
    tverberg_cmd->add_flag("--count", count_only, "print only the number of witnesses");

    // spherical
    int m_param = 6;
    auto* spherical_cmd = app.add_subcommand("spherical", "spherical partitions of [m]");
    spherical_cmd->add_option("--m", m_param, "ground set size")->required();
    spherical_cmd->add_option("--r", r_param, "number of blocks")->required();
    spherical_cmd->add_flag("--count", count_only, "print only the count");

    // triple-vk
    std::string sign_map_path;
    bool chessboard = false;
    auto* triple_cmd = app.add_subcommand("triple-vk", "triple van Kampen number mod 3");
    triple_cmd->add_option("drawing", drawing_path, "K7 drawing file")->required();
    triple_cmd->add_option("--sign-map", sign_map_path, "sign map file");
    triple_cmd->add_flag("--chessboard", chessboard,
                         "use the chessboard-coloring sign map (experimental)");

    // sign-experiment
    int trials = 10, threads = 1, bends = 1;
    std::uint64_t seed = 1;
    auto* exp_cmd = app.add_subcommand(
        "sign-experiment", "triple van Kampen values over random drawings (experimental)");
    exp_cmd->add_option("--trials", trials, "number of random drawings")->required();
    exp_cmd->add_option("--seed", seed, "base seed");
    exp_cmd->add_option("--threads", threads, "worker threads");
    exp_cmd->add_option("--bends", bends, "bends per edge");
    exp_cmd->add_option("--sign-map", sign_map_path, "sign map file");
    exp_cmd->add_flag("--chessboard", chessboard,
                      "use the chessboard-coloring sign map (experimental)");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto load_sign_map = [&]() -> SignMap {
        if (chessboard) {
            auto maps = chessboard_sign_maps();
            if (maps.empty()) throw error("no chessboard coloring exists");
            return maps[0];
        }
        if (!sign_map_path.empty()) return parse_sign_map(detail::slurp(sign_map_path));
        return constant_sign_map(+1);
    };

    try {
        if (*planarity_cmd || *hyper_cmd) {
            Gf2System system;
            std::string name;
            if (*planarity_cmd) {
                Graph g = parse_graph(detail::slurp(planarity_path));
                std::vector<int> ordering;
                if (!ordering_csv.empty()) {
                    std::stringstream ss(ordering_csv);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) ordering.push_back(std::stoi(tok));
                }
                system = build_ht_system(g, ordering);
                name = "planarity";
            } else {
                system = build_ht_system_hyper(parse_hypergraph(detail::slurp(hyper_path)));
                name = "planarity-hyper";
            }
            PlanarityVerdict v = gf2_solve(system);
            if (as_json) {
                json j = cli_detail::json_header(name);
                j["planar"] = v.planar;
                if (v.planar && want_witness)
                    j["witness"] = cli_detail::witness_terms_json(v.witness);
                if (!v.planar && want_certificate) j["certificate"] = v.certificate;
                out << j.dump() << "\n";
            } else {
                out << (v.planar ? "planar" : "non-planar") << "\n";
                if (v.planar && want_witness)
                    for (const auto& [a, e] : v.witness)
                        out << "x[" << a << "," << e[0] << e[1] << "] = 1\n";
                if (!v.planar && want_certificate) {
                    out << "inconsistent row combination:";
                    for (int i : v.certificate) out << " " << i;
                    out << "\n";
                }
            }
            return v.planar ? 0 : 1;
        }

        if (*vk_cmd) {
            Drawing d = parse_drawing(detail::slurp(drawing_path));
            int v = van_kampen_number(d);
            if (as_json) {
                json j = cli_detail::json_header("vk-number");
                j["value"] = v;
                out << j.dump() << "\n";
            } else {
                out << "v(f) = " << v << "\n";
            }
            return 0;
        }

        if (*radon_cmd) {
            Drawing d = parse_drawing(detail::slurp(drawing_path));
            int v = radon_number(d);
            if (as_json) {
                json j = cli_detail::json_header("radon-number");
                j["value"] = v;
                out << j.dump() << "\n";
            } else {
                out << "rho(f) = " << v << "\n";
            }
            return 0;
        }

        if (*check_cmd) {
            Drawing d = parse_drawing(detail::slurp(drawing_path));
            if (as_json) {
                json j = cli_detail::json_header("check-drawing");
                j["ok"] = d.gp.ok;
                if (!d.gp.ok) j["violation"] = cli_detail::violation_text(*d.gp.violation);
                out << j.dump() << "\n";
            } else if (d.gp.ok) {
                out << "general position: ok\n";
            } else {
                out << "general position violated: "
                    << cli_detail::violation_text(*d.gp.violation) << "\n";
            }
            return d.gp.ok ? 0 : 1;
        }

        if (*cocycle_cmd) {
            Drawing d = parse_drawing(detail::slurp(drawing_path));
            Cochain nu;
            if (cocycle_cmd->count("--r") && rfold != 2) {
                nu = r_fold_intersection_cocycle(d, rfold);
            } else if (ring_name == "gf2") {
                nu = intersection_cocycle_mod2(d);
            } else {
                nu = integral_intersection_cocycle(d);
            }
            if (as_json) {
                json j = cli_detail::json_header("cocycle");
                j["ring"] = (ring_name == "gf2" && !cocycle_cmd->count("--r")) ? "gf2" : "z";
                j["entries"] = cli_detail::cochain_json(nu);
                out << j.dump() << "\n";
            } else {
                out << cochain_dump(nu);
            }
            return 0;
        }

        if (*span_cmd) {
            Ring ring = ring_name == "gf2" ? Ring::gf2 : Ring::integer;
            bool member = false;
            json j = cli_detail::json_header("coboundary-span");
            std::string witness_text;
            if (!cochain_path.empty()) {
                std::string host_text = detail::slurp(host_path);
                std::string cochain_text = detail::slurp(cochain_path);
                if (hyper_host) {
                    Hypergraph2 k = parse_hypergraph(host_text);
                    IndexKind kind = ring == Ring::gf2 ? IndexKind::hyper_kstar
                                                       : IndexKind::hyper_ktilde;
                    if (span_cmd->count("--r") && rfold > 2) kind = IndexKind::hyper_kunderline;
                    auto ix = std::make_shared<CellPairIndex>(pair_index(k, kind, rfold));
                    Cochain nu = cochain_parse(cochain_text, ix, ring);
                    if (ring == Ring::gf2) {
                        auto w = in_coboundary_span_gf2(nu, k);
                        member = w.has_value();
                        if (member && want_witness)
                            j["witness"] = cli_detail::witness_terms_json(*w);
                    } else {
                        auto w = in_coboundary_span_int(nu, k);
                        member = w.has_value();
                    }
                } else {
                    Graph g = parse_graph(host_text);
                    auto ix = std::make_shared<CellPairIndex>(pair_index(
                        g, ring == Ring::gf2 ? IndexKind::graph_kstar : IndexKind::graph_ktilde));
                    Cochain nu = cochain_parse(cochain_text, ix, ring);
                    if (ring == Ring::gf2) {
                        auto w = in_coboundary_span_gf2(nu, g);
                        member = w.has_value();
                        if (member && want_witness)
                            j["witness"] = cli_detail::witness_terms_json(*w);
                    } else {
                        auto w = in_coboundary_span_int(nu, g);
                        member = w.has_value();
                    }
                }
            } else if (span_drawings.size() == 2) {
                Drawing d1 = parse_drawing(detail::slurp(span_drawings[0]));
                Drawing d2 = parse_drawing(detail::slurp(span_drawings[1]));
                auto w = cochain_difference_in_span(d1, d2, ring);
                member = w.has_value();
                if (member && want_witness && ring == Ring::gf2)
                    j["witness"] = cli_detail::witness_terms_json(w->gf2_terms);
            } else {
                err << "error: pass either --cochain or two drawing files\n";
                return 2;
            }
            j["in_span"] = member;
            if (as_json) out << j.dump() << "\n";
            else out << (member ? "in coboundary span" : "not in coboundary span") << "\n";
            return member ? 0 : 1;
        }

        if (*tverberg_cmd) {
            std::vector<Point> pts = parse_points(detail::slurp(points_path));
            if (r_param == 2 && pts.size() == 4) {
                // the Radon case rides on the same machinery
            }
            auto witnesses = tverberg_partitions(pts, r_param);
            if (as_json) {
                json j = cli_detail::json_header("tverberg");
                j["count"] = witnesses.size();
                if (!count_only) {
                    json arr = json::array();
                    for (const auto& w : witnesses)
                        arr.push_back({{"partition", partition_to_string(w.partition)},
                                       {"common_point", point_to_string(w.common_point)}});
                    j["witnesses"] = arr;
                }
                out << j.dump() << "\n";
            } else if (count_only) {
                out << witnesses.size() << "\n";
            } else {
                for (const auto& w : witnesses)
                    out << partition_to_string(w.partition) << " at "
                        << point_to_string(w.common_point) << "\n";
                out << witnesses.size() << " partition(s)\n";
            }
            return 0;
        }

        if (*spherical_cmd) {
            auto parts = spherical_partitions(m_param, r_param);
            if (as_json) {
                json j = cli_detail::json_header("spherical");
                j["count"] = parts.size();
                if (!count_only) {
                    json arr = json::array();
                    for (const Partition& p : parts) arr.push_back(partition_to_string(p));
                    j["partitions"] = arr;
                }
                out << j.dump() << "\n";
            } else if (count_only) {
                out << parts.size() << "\n";
            } else {
                for (const Partition& p : parts) out << partition_to_string(p) << "\n";
            }
            return 0;
        }

        if (*ttw_cmd) {
            Drawing d = parse_drawing(detail::slurp(drawing_path));
            auto w = topological_tverberg_witness(d);
            if (as_json) {
                json j = cli_detail::json_header("ttw");
                j["found"] = w.has_value();
                if (w) {
                    if (w->kind == TopologicalTverbergWitness::Kind::triangles_around_vertex) {
                        j["kind"] = "triangles-around-vertex";
                        j["vertex"] = w->vertex;
                        j["triangles"] = {
                            {w->triangles[0][0], w->triangles[0][1], w->triangles[0][2]},
                            {w->triangles[1][0], w->triangles[1][1], w->triangles[1][2]}};
                    } else {
                        j["kind"] = "triangle-around-crossing";
                        j["edges"] = {{w->edge1[0], w->edge1[1]}, {w->edge2[0], w->edge2[1]}};
                        j["triangle"] = {w->triangles[0][0], w->triangles[0][1],
                                         w->triangles[0][2]};
                    }
                    j["point"] = point_to_string(w->where);
                }
                out << j.dump() << "\n";
            } else if (!w) {
                out << "no witness found\n";
            } else if (w->kind == TopologicalTverbergWitness::Kind::triangles_around_vertex) {
                out << "triangles " << w->triangles[0][0] << w->triangles[0][1]
                    << w->triangles[0][2] << " and " << w->triangles[1][0] << w->triangles[1][1]
                    << w->triangles[1][2] << " wind around vertex " << w->vertex << "\n";
            } else {
                out << "triangle " << w->triangles[0][0] << w->triangles[0][1]
                    << w->triangles[0][2] << " winds around the crossing of " << w->edge1[0]
                    << w->edge1[1] << " and " << w->edge2[0] << w->edge2[1] << " at "
                    << point_to_string(w->where) << "\n";
            }
            return w ? 0 : 1;
        }

        if (*triple_cmd) {
            Drawing d = parse_drawing(detail::slurp(drawing_path));
            SignMap s = load_sign_map();
            int v = triple_vk_number(d, s);
            if (as_json) {
                json j = cli_detail::json_header("triple-vk");
                j["value_mod_3"] = v;
                out << j.dump() << "\n";
            } else {
                out << "V(f) mod 3 = " << v << "\n";
            }
            return 0;
        }

        if (*exp_cmd) {
            SignMap s = load_sign_map();
            auto rep = sign_map_experiment(s, trials, seed, threads, bends);
            std::array<int, 3> histogram{0, 0, 0};
            for (int v : rep.values) ++histogram[v];
            if (as_json) {
                json j = cli_detail::json_header("sign-experiment");
                j["trials"] = trials;
                j["seed"] = seed;
                j["values"] = rep.values;
                j["histogram"] = histogram;
                j["constant"] = rep.constant;
                j["all_nonzero"] = rep.all_nonzero;
                out << j.dump() << "\n";
            } else {
                out << "values:";
                for (int v : rep.values) out << " " << v;
                out << "\nhistogram: 0:" << histogram[0] << " 1:" << histogram[1]
                    << " 2:" << histogram[2] << "\n";
                out << "constant: " << (rep.constant ? "yes" : "no")
                    << ", all nonzero: " << (rep.all_nonzero ? "yes" : "no") << "\n";
            }
            return 0;
        }
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const degenerate_error& e) {
        err << "degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace drawinv

#endif
