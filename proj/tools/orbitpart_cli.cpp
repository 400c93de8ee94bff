#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitpart/orbitpart.h"

namespace {

struct Owned {
    char* s = nullptr;
    ~Owned() { op_string_free(s); }
};

struct Rep {
    op_rep* p = nullptr;
    ~Rep() { op_rep_free(p); }
};

struct Points {
    op_points* p = nullptr;
    ~Points() { op_points_free(p); }
};

struct Partition {
    op_partition* p = nullptr;
    ~Partition() { op_partition_free(p); }
};

class Failure {
public:
    explicit Failure(int code) : code_(code) {}
    int code() const { return code_; }

private:
    int code_;
};

void check(op_status s) {
    if (s == OP_OK) return;
    std::cerr << "error: " << op_last_error() << "\n";
    throw Failure(static_cast<int>(s));
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        throw Failure(3);
    }
    out << text;
}

std::vector<double> parse_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            std::cerr << "error: cannot parse " << what << " entry '" << item << "'\n";
            throw Failure(3);
        }
    }
    return out;
}

void print_warnings(const char* json_text) {
    const auto doc = nlohmann::json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.contains("warnings")) return;
    for (const auto& w : doc["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inscribed orbit-polytope partitions of point sets"};
    app.require_subcommand(1);

    std::string rep_key, points_path, partition_path, output, u_text, project;
    std::uint64_t seed = 0;
    int count = 0, threads = 0;
    op_solver_options opts;
    op_solver_options_default(&opts);
    double verify_tol = 1e-8, quantization = 1e-6;
    bool below = false;

    app.add_option("--threads", threads, "Worker threads for solver restarts (0: all cores)")->check(CLI::NonNegativeNumber);

    auto* catalog = app.add_subcommand("catalog", "Catalog of built-in representations");
    auto* catalog_list = catalog->add_subcommand("list", "List entries with their point bounds as JSON");
    catalog->require_subcommand(1);
    catalog_list->add_option("-o,--output", output, "Output file (default stdout)");

    auto* gen = app.add_subcommand("gen-points", "Draw seeded standard normal points");
    gen->add_option("--rep", rep_key, "Catalog key or representation JSON")->required();
    gen->add_option("--seed", seed, "Random seed");
    gen->add_option("--count", count, "Number of points (default: the required number)")->check(CLI::NonNegativeNumber);
    gen->add_option("-o,--output", output, "Output CSV (default stdout)");

    auto* part = app.add_subcommand("partition", "Compute an orbit partition");
    part->add_option("--rep", rep_key, "Catalog key or representation JSON")->required();
    part->add_option("--points", points_path, "Points file (CSV or JSON)")->required();
    part->add_option("--tol", opts.tol, "Solver tolerance")->check(CLI::PositiveNumber);
    part->add_option("--restarts", opts.restarts, "Random restarts")->check(CLI::PositiveNumber);
    part->add_option("--max-iter", opts.max_iter, "Pivot cap per restart")->check(CLI::PositiveNumber);
    part->add_option("--seed", opts.seed, "Restart seed");
    part->add_option("-o,--output", output, "Output JSON (default stdout)");

    auto* ver = app.add_subcommand("verify", "Re-check a partition file against its points");
    ver->add_option("--rep", rep_key, "Catalog key or representation JSON")->required();
    ver->add_option("--points", points_path, "Points file")->required();
    ver->add_option("--partition", partition_path, "Partition JSON")->required();
    ver->add_option("--tol", verify_tol, "Residual tolerance")->check(CLI::PositiveNumber);
    ver->add_option("-o,--output", output, "Output JSON (default stdout)");

    auto* orc = app.add_subcommand("oracle", "Compare pivoting with exhaustive search");
    orc->add_option("--rep", rep_key, "Catalog key or representation JSON")->required();
    orc->add_option("--points", points_path, "Points file")->required();
    orc->add_flag("--below-threshold", below, "Points file holds fewer than the required number of points");
    orc->add_option("--seed", opts.seed, "Restart seed");
    orc->add_option("-o,--output", output, "Output JSON (default stdout)");

    auto* sym = app.add_subcommand("symmetry", "Isometry group of the orbit polytope of u");
    sym->add_option("--rep", rep_key, "Catalog key or representation JSON")->required();
    sym->add_option("--u", u_text, "Comma-separated coordinates of u")->required();
    sym->add_option("--quantization", quantization, "Gram entry matching tolerance")->check(CLI::PositiveNumber);
    sym->add_option("-o,--output", output, "Output JSON (default stdout)");

    auto* irr = app.add_subcommand("irreducibility", "Character norm test for absolute irreducibility");
    irr->add_option("--rep", rep_key, "Catalog key or representation JSON")->required();
    irr->add_option("-o,--output", output, "Output JSON (default stdout)");

    auto* ren = app.add_subcommand("render", "Draw a partition as SVG (plane) or OBJ (space)");
    ren->add_option("--rep", rep_key, "Catalog key or representation JSON")->required();
    ren->add_option("--points", points_path, "Points file")->required();
    ren->add_option("--partition", partition_path, "Partition JSON")->required();
    ren->add_option("--project", project, "Three 1-based coordinates to project onto, e.g. \"1,2,3\"");
    ren->add_option("-o,--output", output, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }
    opts.threads = threads;

    try {
        if (catalog_list->parsed()) {
            Owned s;
            check(op_catalog_list_json(&s.s));
            emit(s.s, output);
            return 0;
        }

        Rep rep;
        check(op_rep_create(rep_key.c_str(), &rep.p));

        if (gen->parsed()) {
            Points pts;
            check(op_points_generate(rep.p, seed, count, &pts.p));
            Owned s;
            check(op_points_to_csv(pts.p, &s.s));
            emit(s.s, output);
            return 0;
        }
        if (irr->parsed()) {
            Owned s;
            check(op_irreducibility_json(rep.p, &s.s));
            emit(s.s, output);
            return 0;
        }
        if (sym->parsed()) {
            const auto u = parse_list(u_text, "--u");
            Owned s;
            check(op_symmetry_json(rep.p, u.data(), static_cast<int>(u.size()), quantization, &s.s));
            emit(s.s, output);
            return 0;
        }

        Points pts;
        check(op_points_read(points_path.c_str(), &pts.p));

        if (part->parsed()) {
            Partition p;
            const op_status st = op_partition_compute(rep.p, pts.p, &opts, &p.p);
            if (st != OP_OK && st != OP_ERR_NOT_CONVERGED) check(st);
            const std::string why = op_last_error();
            Owned s;
            check(op_partition_to_json(rep.p, p.p, &s.s));
            print_warnings(s.s);
            emit(s.s, output);
            if (st == OP_ERR_NOT_CONVERGED) {
                std::cerr << "error: " << why << "\n";
                return 2;
            }
            return 0;
        }
        if (orc->parsed()) {
            Owned s;
            check(op_oracle_json(rep.p, pts.p, below ? 1 : 0, &opts, &s.s));
            emit(s.s, output);
            return 0;
        }

        Partition p;
        check(op_partition_read(rep.p, partition_path.c_str(), &p.p));
        if (ver->parsed()) {
            Owned s;
            int passed = 0;
            check(op_verify_json(rep.p, pts.p, p.p, verify_tol, &s.s, &passed));
            emit(s.s, output);
            if (!passed) {
                std::cerr << "error: partition failed verification\n";
                return 3;
            }
            return 0;
        }
        if (ren->parsed()) {
            const int* proj = nullptr;
            int axes[3];
            if (!project.empty()) {
                const auto v = parse_list(project, "--project");
                if (v.size() != 3) {
                    std::cerr << "error: --project needs three coordinates\n";
                    return 3;
                }
                for (int k = 0; k < 3; ++k) axes[k] = static_cast<int>(v[k]) - 1;
                proj = axes;
            }
            Owned s;
            const char* format = nullptr;
            check(op_render(pts.p, p.p, proj, &s.s, &format));
            emit(s.s, output);
            return 0;
        }
    } catch (const Failure& f) {
        return f.code();
    }
    return 1;
}
