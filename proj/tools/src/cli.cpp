#include "exseq_tools/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "exseq/mutation.hpp"
#include "exseq/poset.hpp"
#include "exseq/rouquier.hpp"
#include "exseq/toric.hpp"
#include "exseq/x2.hpp"
#include "exseq_tools/io.hpp"
#include "exseq_tools/render.hpp"
#include "exseq_tools/verify.hpp"

namespace exseq::tools {

namespace {

struct Emitter {
    std::ostream& out;
    std::string path;

    void text(const std::string& s) const {
        if (path.empty())
            out << s;
        else
            write_text(path, s);
    }
    void doc(const json& j) const { text(j.dump(2) + "\n"); }
};

VarietySpec load_spec(const std::string& path) {
    if (path.empty()) throw InputError("", "--spec is required");
    return spec_from_json(read_json_file(path));
}

std::vector<Bundle> load_sequence(const std::string& path) {
    if (path.empty()) throw InputError("", "--sequence is required");
    return bundles_from_json(read_json_file(path));
}

json set_summary(const VarietySpec& s, const std::vector<Bundle>& set) {
    json j;
    j["bundles"] = to_json(set);
    bool exc = is_exceptional_set(s, set);
    j["exceptional_set"] = exc;
    j["maximal"] = exc && int(set.size()) == rank_k0(s);
    if (!exc) return j;
    j["strong"] = is_strongly_exceptional(s, set);
    j["effective"] = is_effective_set(s, set);
    return j;
}

json trace_json(const DerivationTrace& t) {
    json steps = json::array();
    for (const auto& st : t.steps) {
        json j = {{"op", step_name(st.kind)}, {"before", to_json(st.before)}, {"after", to_json(st.after)}};
        if (st.kind == StepKind::Swap || st.kind == StepKind::BananaLeft || st.kind == StepKind::BananaRight) j["index"] = st.index;
        if (st.kind == StepKind::Twist) j["twist"] = to_json(st.twist);
        steps.push_back(j);
    }
    return {{"spec", to_json(t.spec)}, {"initial", to_json(t.initial)}, {"steps", steps}, {"final", to_json(t.final_sequence())},
            {"shifts", t.shifts}, {"orlov_projection", t.projection}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact line-bundle cohomology and exceptional sequences on Picard-rank-2 projective bundles", "exseq"};
    app.require_subcommand(1, 1);

    std::string spec_path, seq_path, out_path, format = "json", section, archive, trace_path;
    int window = -1, offsets = 3;
    std::size_t limit = 10000;
    bool all = false;

    auto* loci = app.add_subcommand("loci", "cohomology loci on a window of Pic(X)");
    loci->add_option("--spec", spec_path, "variety spec (JSON)")->required();
    loci->add_option("--window", window, "half-width of the window (default 12)");
    loci->add_option("--format", format, "json|svg|ascii")->check(CLI::IsMember({"json", "svg", "ascii"}));
    loci->add_option("--out", out_path);

    auto* check = app.add_subcommand("check", "exceptionality, strongness and effectiveness of a set");
    check->add_option("--spec", spec_path)->required();
    check->add_option("--sequence", seq_path)->required();
    check->add_option("--out", out_path);

    auto* enumerate = app.add_subcommand("enumerate", "all maximal exceptional sets, one JSON object per line");
    enumerate->add_option("--spec", spec_path)->required();
    enumerate->add_option("--offsets", offsets, "free chain offset window (toric, default 3)");
    enumerate->add_option("--window", window, "lattice window (X_2, default 8)");
    enumerate->add_option("--out", out_path);

    auto* classify_cmd = app.add_subcommand("classify-x2", "enumerate and classify maximal exceptional sets on X_2");
    classify_cmd->add_option("--window", window, "lattice window (default 8)");
    classify_cmd->add_option("--out", out_path);

    auto* reduce = app.add_subcommand("reduce", "mutate a maximal exceptional set on X_2 to Orlov type");
    reduce->add_option("--spec", spec_path);
    reduce->add_option("--sequence", seq_path)->required();
    reduce->add_option("--trace", trace_path, "where to write the trace (default stdout)");

    auto* poset = app.add_subcommand("poset", "generating relation, poset and exceptional orders");
    poset->add_option("--spec", spec_path)->required();
    poset->add_option("--sequence", seq_path)->required();
    poset->add_option("--limit", limit, "maximum number of orders listed");
    poset->add_option("--out", out_path);

    auto* rouq = app.add_subcommand("rouquier", "tilting witness, i0 and Rouquier dimension bounds");
    rouq->add_option("--spec", spec_path)->required();
    rouq->add_option("--window", window, "gap search window");
    rouq->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify-paper", "run the regression checks");
    auto* sec_opt = verify->add_option("--section", section, "one of: cohomology posets toric x2 mutation chow rouquier");
    verify->add_flag("--all", all)->excludes(sec_opt);
    verify->add_option("--archive", archive, "directory for generated reports");
    verify->add_option("--out", out_path);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Emitter emit{out, out_path};
        if (loci->parsed()) {
            VarietySpec s = load_spec(spec_path);
            int w = window < 0 ? 12 : window;
            if (format == "svg")
                emit.text(loci_svg(s, w));
            else if (format == "ascii")
                emit.text(loci_ascii(s, w));
            else
                emit.doc(loci_json(s, w));
            return 0;
        }
        if (check->parsed()) {
            VarietySpec s = load_spec(spec_path);
            auto seq = load_sequence(seq_path);
            json j = set_summary(s, seq);
            j["spec"] = to_json(s);
            j["exceptional_sequence"] = is_exceptional_sequence(s, seq);
            if (j["exceptional_set"].get<bool>()) {
                j["F"] = to_json(compute_F(s, seq), seq);
                j["pF0"] = to_json(pf0(s, seq), seq);
            }
            if (s.is_toric() && j["maximal"].get<bool>()) {
                try {
                    LayerDecomposition d = decompose_layers(s, seq);
                    j["layers"] = to_json(d);
                    json dl = json::array(), bl = json::array();
                    for (int k : displaced_layers(s, d)) dl.push_back(layer_name(k));
                    for (int k : bad_layers(s, d)) bl.push_back(layer_name(k));
                    j["displaced_layers"] = dl;
                    j["bad_layers"] = bl;
                } catch (const ShapeError& e) {
                    j["layers_error"] = e.what();
                }
            }
            if (s == x2_spec() && j["maximal"].get<bool>()) {
                MesClassLabel l = classify(seq);
                j["class"] = label_name(l);
            }
            emit.doc(j);
            return 0;
        }
        if (enumerate->parsed()) {
            VarietySpec s = load_spec(spec_path);
            std::ostringstream lines;
            if (s.is_toric()) {
                for (const auto& m : enumerate_mes(s, offsets)) {
                    json j = set_summary(s, m.bundles);
                    j["layers"] = to_json(decompose_layers(s, m.bundles));
                    lines << j.dump() << "\n";
                }
            } else if (s == x2_spec()) {
                for (const auto& m : enumerate_mes_x2(window < 0 ? 8 : window)) {
                    json j = set_summary(s, m);
                    j["class"] = label_name(classify(m));
                    lines << j.dump() << "\n";
                }
            } else {
                throw InputError("/kind", "enumeration is available for toric specs and X_2");
            }
            emit.text(lines.str());
            return 0;
        }
        if (classify_cmd->parsed()) {
            int w = window < 0 ? 8 : window;
            json sets = json::array();
            std::map<std::string, int> counts;
            for (const auto& m : enumerate_mes_x2(w)) {
                MesClassLabel l = classify(m);
                ++counts[class_name(l.cls, l.sigma_applied)];
                json j = {{"bundles", to_json(m)}, {"class", class_name(l.cls, l.sigma_applied)}, {"label", label_name(l)}};
                if (l.cls != MesClass::Unclassified) {
                    auto seq = reconstruct(l);
                    j["order"] = to_json(seq);
                    j["pF0"] = to_json(pf0_table(seq), seq);
                }
                sets.push_back(j);
            }
            emit.doc({{"window", w}, {"counts", counts}, {"sets", sets}});
            return counts.count("unclassified") ? 1 : 0;
        }
        if (reduce->parsed()) {
            if (!spec_path.empty() && !(load_spec(spec_path) == x2_spec())) throw InputError("/kind", "reduction is implemented for X_2 only");
            auto seq = load_sequence(seq_path);
            DerivationTrace t = reduce_to_orlov(seq);
            replay(t);
            Emitter{out, trace_path}.doc(trace_json(t));
            return 0;
        }
        if (poset->parsed()) {
            VarietySpec s = load_spec(spec_path);
            auto seq = load_sequence(seq_path);
            json j;
            j["bundles"] = to_json(seq);
            j["F"] = to_json(compute_F(s, seq), seq);
            j["P"] = to_json(associated_poset(s, seq), seq);
            OrderList o = exceptional_orders(s, seq, limit);
            json orders = json::array();
            for (const auto& ord : o.orders) orders.push_back(to_json(ord));
            j["orders"] = orders;
            j["truncated"] = o.truncated;
            emit.doc(j);
            return 0;
        }
        if (rouq->parsed()) {
            VarietySpec s = load_spec(spec_path);
            RouquierResult r = rouquier_dimension(s, window);
            json j = {{"spec", to_json(s)}, {"dim", r.dim}, {"rouquier", r.exact ? "exact" : "interval"}, {"lower", r.lower}};
            if (r.witness) {
                j["i0"] = r.i0;
                j["generation_time"] = r.upper;
                j["upper"] = r.upper;
                j["witness"] = {{"bundles", to_json(r.witness->bundles)}, {"starts", r.witness->starts}};
            } else {
                j["upper"] = nullptr;
            }
            emit.doc(j);
            return 0;
        }
        if (verify->parsed()) {
            if (!all && section.empty()) throw InputError("", "give --section ID or --all");
            VerifyOptions opt;
            opt.archive_dir = archive;
            auto verdicts = run_section(all ? "all" : section, opt);
            json arr = json::array();
            bool ok = true;
            for (const auto& v : verdicts) {
                arr.push_back(to_json(v));
                ok = ok && v.status == Status::Pass;
                err << "criterion " << v.criterion << " " << v.id << ": " << status_name(v.status) << "\n";
            }
            emit.doc(arr);
            return ok ? 0 : 1;
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, std::cout, std::cerr);
}

}  // namespace exseq::tools
