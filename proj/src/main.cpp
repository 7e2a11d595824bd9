// bqfare command-line tool: verify biquandles, enumerate fares, compute
// homsets and fare multiset/polynomial invariants over the built-in catalog
// or user-supplied diagram files.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "biquandle.hpp"
#include "catalog.hpp"
#include "diagram.hpp"
#include "fare.hpp"
#include "homset.hpp"
#include "zmod.hpp"

namespace {

using namespace bqf;
using nlohmann::json;

constexpr int kOk = 0, kSemantic = 1, kInput = 2;

struct Common {
    std::string data_dir = "data";
    std::string format = "text";
    int jobs = 0;
};

int die_input(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kInput;
}

std::optional<Biquandle> load_biquandle(const std::string& path, std::string* err) {
    auto text = read_file(path);
    if (!text) {
        *err = "cannot read " + path;
        return std::nullopt;
    }
    return parse_biquandle(*text, err);
}

std::optional<FareTable> load_fare(const std::string& path, std::string* err) {
    auto text = read_file(path);
    if (!text) {
        *err = "cannot read " + path;
        return std::nullopt;
    }
    return parse_fare(*text, err);
}

// A --link argument is a catalog name unless it names a readable file.
std::optional<LinkDiagram> resolve_link(const Common& c, const std::string& spec,
                                        std::string* err) {
    if (std::filesystem::exists(spec)) {
        auto text = read_file(spec);
        if (!text) {
            *err = "cannot read " + spec;
            return std::nullopt;
        }
        return parse_diagram(*text, err);
    }
    auto cat = Catalog::open(c.data_dir, err);
    if (!cat) return std::nullopt;
    return cat->load(spec, err);
}

void apply_jobs(const Common& c) {
#ifdef _OPENMP
    if (c.jobs > 0) omp_set_num_threads(c.jobs);
#else
    (void)c;
#endif
}

struct LinkResult {
    std::string name;
    i64 colorings = 0;
    FareMultiset multiset;
    std::string additive, multiplicative;  // multiplicative empty if undefined
};

json multiset_json(const FareMultiset& M) {
    json arr = json::array();
    for (const auto& [val, mult] : M)
        arr.push_back({{"value", val.residues}, {"multiplicity", mult}});
    return arr;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

int emit_link_results(const Common& c, const std::vector<LinkResult>& rows) {
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json j = {{"link", r.name},
                      {"colorings", r.colorings},
                      {"multiset", multiset_json(r.multiset)},
                      {"additive", r.additive}};
            j["multiplicative"] = r.multiplicative.empty() ? json(nullptr) : json(r.multiplicative);
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
    } else if (c.format == "csv") {
        std::cout << "link,colorings,multiset,additive,multiplicative\n";
        for (const auto& r : rows)
            std::cout << csv_quote(r.name) << "," << r.colorings << ","
                      << csv_quote(multiset_str(r.multiset)) << ","
                      << csv_quote(r.additive) << "," << csv_quote(r.multiplicative) << "\n";
    } else {
        for (const auto& r : rows) {
            std::cout << r.name << ": colorings=" << r.colorings
                      << " multiset=" << multiset_str(r.multiset)
                      << " additive=" << r.additive;
            if (!r.multiplicative.empty()) std::cout << " multiplicative=" << r.multiplicative;
            std::cout << "\n";
        }
    }
    return kOk;
}

int run_links(const Common& c, const Biquandle& B, const FareTable& f,
              const std::vector<std::string>& links) {
    if (!satisfies_axioms(B, f)) {
        std::cerr << "error: table is not a fare for this biquandle\n";
        return kSemantic;
    }
    std::vector<LinkDiagram> ds;
    for (const auto& name : links) {
        std::string err;
        auto D = resolve_link(c, name, &err);
        if (!D) return die_input(err);
        ds.push_back(*D);
    }
    std::vector<LinkResult> rows(links.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < (std::ptrdiff_t)links.size(); ++i) {
        LinkResult r;
        r.name = links[(std::size_t)i];
        r.multiset = fare_multiset_serial(ds[(std::size_t)i], B, f);
        for (const auto& [v, m] : r.multiset) r.colorings += m;
        r.additive = render_additive(r.multiset);
        if (auto mp = render_multiplicative(r.multiset)) r.multiplicative = *mp;
        rows[(std::size_t)i] = std::move(r);
    }
    return emit_link_results(c, rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"biquandle fare invariants of oriented classical/virtual links"};
    app.require_subcommand(1);

    Common common;
    std::string bq_path, fare_path, group_spec, kind_spec = "complete";
    int order = 2;
    bool count_only = false;
    std::vector<std::string> links;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--data", common.data_dir, "catalog data directory");
        sub->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--jobs", common.jobs, "worker threads (0 = default)");
    };

    auto* c_verify = app.add_subcommand("verify", "check the biquandle axioms");
    c_verify->add_option("--biquandle", bq_path)->required();
    add_common(c_verify);

    auto* c_fares = app.add_subcommand("fares", "enumerate fares of a biquandle");
    c_fares->add_option("--biquandle", bq_path)->required();
    c_fares->add_option("--order", order)->check(CLI::IsMember({1, 2}));
    c_fares->add_option("--kind", kind_spec)
        ->check(CLI::IsMember({"plain", "complete", "through", "crooked"}));
    c_fares->add_option("--group", group_spec)->required();
    c_fares->add_flag("--count-only", count_only);
    add_common(c_fares);

    auto* c_inv = app.add_subcommand("invariant", "fare multiset and polynomials per link");
    c_inv->add_option("--biquandle", bq_path)->required();
    c_inv->add_option("--fare", fare_path)->required();
    c_inv->add_option("--link", links, "catalog name or diagram file")->required();
    add_common(c_inv);

    auto* c_table = app.add_subcommand("table", "invariant table over a link set");
    c_table->add_option("--biquandle", bq_path)->required();
    c_table->add_option("--fare", fare_path)->required();
    c_table->add_option("--link", links, "catalog name or diagram file");
    add_common(c_table);

    auto* c_dec = app.add_subcommand("decompose", "split a complete fare as through + crooked");
    c_dec->add_option("--biquandle", bq_path)->required();
    c_dec->add_option("--fare", fare_path)->required();
    add_common(c_dec);

    auto* c_hom = app.add_subcommand("homset", "enumerate biquandle colorings of a link");
    c_hom->add_option("--biquandle", bq_path)->required();
    c_hom->add_option("--link", links)->required();
    c_hom->add_flag("--count-only", count_only);
    add_common(c_hom);

    auto* c_pd = app.add_subcommand("convert-pd", "convert a PD-code file to diagram format");
    std::string pd_path;
    c_pd->add_option("--link", pd_path, "PD code file")->required();
    add_common(c_pd);

    CLI11_PARSE(app, argc, argv);
    apply_jobs(common);
    std::string err;

    if (c_verify->parsed()) {
        auto B = load_biquandle(bq_path, &err);
        if (!B) return die_input(err);
        auto rep = verify(*B);
        if (rep.valid) {
            std::cout << "valid biquandle (n=" << B->n << ")\n";
            return kOk;
        }
        std::cout << "invalid: " << rep.violations.size() << " violation(s)\n";
        for (const auto& v : rep.violations) {
            std::cout << "  axiom " << v.axiom << " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                std::cout << (i ? "," : "") << v.witness[i];
            std::cout << ")\n";
        }
        return kSemantic;
    }

    if (c_fares->parsed()) {
        auto B = load_biquandle(bq_path, &err);
        if (!B) return die_input(err);
        if (!verify(*B).valid) {
            std::cerr << "error: input is not a biquandle\n";
            return kSemantic;
        }
        auto G = CoeffGroup::parse(group_spec);
        if (!G) return die_input("bad group spec '" + group_spec + "'");
        if ((order == 1) != (kind_spec == "plain"))
            return die_input("order 1 takes kind=plain; order 2 takes a route kind");
        RouteKind kind = order == 1 ? RouteKind::Complete : *parse_route_kind(kind_spec);
        if (count_only) {
            std::cout << fare_count(*B, order, kind, *G) << "\n";
            return kOk;
        }
        bool first = true;
        enumerate_fares(*B, order, kind, *G, [&](const FareTable& f) {
            if (!first) std::cout << "\n";
            first = false;
            std::cout << fare_to_text(f);
            return true;
        });
        return kOk;
    }

    if (c_inv->parsed() || c_table->parsed()) {
        auto B = load_biquandle(bq_path, &err);
        if (!B) return die_input(err);
        if (!verify(*B).valid) {
            std::cerr << "error: input is not a biquandle\n";
            return kSemantic;
        }
        auto f = load_fare(fare_path, &err);
        if (!f) return die_input(err);
        if (f->n != B->n) return die_input("fare size does not match biquandle");
        return run_links(common, *B, *f, links);
    }

    if (c_dec->parsed()) {
        auto B = load_biquandle(bq_path, &err);
        if (!B) return die_input(err);
        if (!verify(*B).valid) {
            std::cerr << "error: input is not a biquandle\n";
            return kSemantic;
        }
        auto f = load_fare(fare_path, &err);
        if (!f) return die_input(err);
        if (f->order != 2 || f->kind != RouteKind::Complete || f->n != B->n)
            return die_input("decompose needs a complete 2-fare for this biquandle");
        if (!satisfies_axioms(*B, *f)) {
            std::cerr << "error: table is not a complete fare for this biquandle\n";
            return kSemantic;
        }
        auto d = decompose(*B, *f);
        if (!d) {
            std::cout << "not decomposable\n";
            return kOk;
        }
        std::cout << "decomposable\n# through part\n" << fare_to_text(d->through)
                  << "# crooked part\n" << fare_to_text(d->crooked);
        return kOk;
    }

    if (c_hom->parsed()) {
        auto B = load_biquandle(bq_path, &err);
        if (!B) return die_input(err);
        if (!verify(*B).valid) {
            std::cerr << "error: input is not a biquandle\n";
            return kSemantic;
        }
        if (links.size() != 1) return die_input("homset takes exactly one --link");
        auto D = resolve_link(common, links[0], &err);
        if (!D) return die_input(err);
        auto cols = enumerate_colorings(*D, *B);
        if (count_only) {
            std::cout << cols.size() << "\n";
            return kOk;
        }
        if (common.format == "json") {
            json arr = json::array();
            for (const auto& c : cols) {
                json row = json::array();
                for (int v : c) row.push_back(v + 1);
                arr.push_back(row);
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            for (const auto& c : cols) {
                for (std::size_t i = 0; i < c.size(); ++i)
                    std::cout << (i ? " " : "") << c[i] + 1;
                std::cout << "\n";
            }
        }
        return kOk;
    }

    if (c_pd->parsed()) {
        auto text = read_file(pd_path);
        if (!text) return die_input("cannot read " + pd_path);
        auto D = convert_pd(*text, &err);
        if (!D) return die_input(err);
        std::cout << diagram_to_text(*D);
        return kOk;
    }

    return kInput;
}
