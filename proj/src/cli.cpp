#include "spinstat/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinstat/oracle.hpp"

namespace spinstat {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { pretty, json, csv };

ojson partition_json(const Partition& p) { return ojson(p.parts()); }

std::string csv_field(const std::string& s) {
    return s.find(',') == std::string::npos ? s : '"' + s + '"';
}

Partition parse_lambda(const std::string& text, int n) {
    if (text == "sym") return Partition(std::vector<int>{n});
    if (text == "antisym") return Partition(std::vector<int>(n, 1));
    return Partition::parse(text);
}

std::string statistics_name(const Partition& lambda, int n) {
    if (lambda.rows() == 1) return "bose";
    if (lambda.rows() == n) return "fermi";
    return "parastatistics";
}

long long ipow(long long base, int exp) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

int resolve_nodes(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("SPINSTAT_NODES")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0; // automatic
}

int emit(const std::string& text, const std::string& out_path, std::ostream& out,
         std::ostream& err) {
    if (out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file " << out_path << "\n";
        return 1;
    }
    file << text;
    return 0;
}

// ---------------------------------------------------------------------------
// nu

int cmd_nu(const Partition& f, int n, int twice_s, const Partition& lambda,
           bool with_oracle, int nodes, double tolerance, Format fmt,
           const std::string& out_path, std::ostream& out, std::ostream& err) {
    Problem problem(f, n, TwiceSpin(twice_s), lambda);
    const EngineValue ev = nu_value(problem);

    std::optional<OracleValue> ov;
    bool agree = true;
    if (with_oracle) {
        const QuadratureSpec spec{resolve_nodes(nodes), tolerance};
        ov = nu_oracle_value(problem, spec);
        agree = ov->nu == ev.nu && ov->residue < tolerance;
    }

    std::ostringstream os;
    if (fmt == Format::json) {
        ojson j;
        j["command"] = "nu";
        j["f"] = partition_json(f);
        j["n"] = n;
        j["entries"] = ojson::array(
            {{{"twice_s", twice_s}, {"lambda", partition_json(lambda)}, {"nu", ev.nu}}});
        ojson checks;
        checks["provenance"] = "engine";
        checks["engine_residue"] = ev.residue;
        if (ov) {
            checks["oracle_nu"] = ov->nu;
            checks["oracle_residue"] = ov->residue;
            checks["agree"] = agree;
        }
        j["checks"] = checks;
        os << j.dump() << "\n";
    } else if (fmt == Format::csv) {
        os << "f,n,twice_s,lambda,nu\n"
           << csv_field(f.str()) << ',' << n << ',' << twice_s << ','
           << csv_field(lambda.str()) << ',' << ev.nu << "\n";
    } else {
        os << "nu(f=" << f.str() << ", n=" << n << ", s=" << TwiceSpin(twice_s).str()
           << ", lambda=" << lambda.str() << ") = " << ev.nu << "  [engine]\n";
        if (ov)
            os << "oracle: " << ov->nu << (agree ? "  [agree]" : "  [MISMATCH]") << "\n";
    }
    const int rc = emit(os.str(), out_path, out, err);
    if (rc != 0) return rc;
    return agree ? 0 : 2;
}

// ---------------------------------------------------------------------------
// table

int cmd_table(const Partition& f, int n, Format fmt, const std::string& out_path,
              std::ostream& out, std::ostream& err) {
    const MultiplicityReport report = classify(f, n);
    const std::vector<Partition> lambdas = partitions_of(n, n);

    // spins with any support; zero rows are suppressed from the table
    std::vector<TwiceSpin> shown;
    for (TwiceSpin s : report.admissible_spins) {
        bool any = false;
        for (const ReportEntry& e : report.entries)
            if (e.twice_s == s && e.nu > 0) any = true;
        if (any) shown.push_back(s);
    }

    const long long zw = zero_weight_dim(f, n);
    long long dim_lhs = 0;
    for (const ReportEntry& e : report.entries)
        dim_lhs += ipow(e.twice_s.twice + 1, n) * sn_dimension(e.lambda) * e.nu;

    std::ostringstream os;
    if (fmt == Format::json) {
        ojson j;
        j["command"] = "table";
        j["f"] = partition_json(f);
        j["n"] = n;
        ojson entries = ojson::array();
        for (const ReportEntry& e : report.entries)
            if (e.nu > 0)
                entries.push_back({{"twice_s", e.twice_s.twice},
                                   {"lambda", partition_json(e.lambda)},
                                   {"nu", e.nu}});
        j["entries"] = entries;
        ojson sums = ojson::array();
        for (TwiceSpin s : report.admissible_spins) {
            long long weighted = 0;
            for (const ReportEntry& e : report.entries)
                if (e.twice_s == s) weighted += sn_dimension(e.lambda) * e.nu;
            sums.push_back({{"twice_s", s.twice},
                            {"weighted_sum", weighted},
                            {"lr_identity", nu_sum_weighted(f, n, s)},
                            {"ok", weighted == nu_sum_weighted(f, n, s)}});
        }
        j["checks"] = {{"weighted_sums", sums},
                       {"zero_weight_dim", zw},
                       {"equal_spin_dim", dim_lhs},
                       {"mixed_spin_dim", zw - dim_lhs},
                       {"decomposition_ok", zw == zero_weight_lr_dim(f, n)}};
        os << j.dump() << "\n";
    } else if (fmt == Format::csv) {
        os << "twice_s,spin,lambda,nu\n";
        for (const ReportEntry& e : report.entries)
            os << e.twice_s.twice << ',' << e.twice_s.str() << ','
               << csv_field(e.lambda.str()) << ',' << e.nu << "\n";
    } else {
        os << "table f=" << f.str() << "  n=" << n << "  (" << f.size() << " boxes)\n";
        if (shown.empty()) {
            os << "  (no spin supports a representation)\n";
        } else {
            auto pad_to = [&](const std::string& text, std::size_t width) {
                os << text;
                for (std::size_t i = text.size(); i < width; ++i) os << ' ';
            };
            std::size_t swidth = 1;
            for (TwiceSpin s : shown) swidth = std::max(swidth, s.str().size());
            os << "  ";
            pad_to("s", swidth);
            for (const Partition& l : lambdas) os << "  " << l.str();
            os << "\n";
            for (TwiceSpin s : shown) {
                os << "  ";
                pad_to(s.str(), swidth);
                for (const Partition& l : lambdas) {
                    long long v = 0;
                    for (const ReportEntry& e : report.entries)
                        if (e.twice_s == s && e.lambda == l) v = e.nu;
                    os << "  ";
                    pad_to(std::to_string(v), l.str().size());
                }
                os << "\n";
            }
        }
        for (TwiceSpin s : report.admissible_spins) {
            long long weighted = 0;
            for (const ReportEntry& e : report.entries)
                if (e.twice_s == s) weighted += sn_dimension(e.lambda) * e.nu;
            os << "  sum_lambda d*nu [s=" << s.str() << "] = " << weighted
               << (weighted == nu_sum_weighted(f, n, s) ? "  (matches LR identity)"
                                                        : "  (LR IDENTITY FAILS)")
               << "\n";
        }
        os << "  zero-weight dimension " << zw << " = equal-spin " << dim_lhs
           << " + mixed-spin " << (zw - dim_lhs)
           << (zw == zero_weight_lr_dim(f, n) ? "  [decomposition consistent]"
                                              : "  [DECOMPOSITION INCONSISTENT]")
           << "\n";
    }
    return emit(os.str(), out_path, out, err);
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const Partition& f, int n, Format fmt, const std::string& out_path,
                 std::ostream& out, std::ostream& err) {
    const MultiplicityReport report = classify(f, n);

    std::ostringstream os;
    if (fmt == Format::json) {
        ojson j;
        j["command"] = "classify";
        j["f"] = partition_json(f);
        j["n"] = n;
        ojson spins = ojson::array();
        for (const SpinStatus& st : report.spin_status) {
            ojson rec;
            rec["twice_s"] = st.twice_s.twice;
            ojson support = ojson::array();
            int count = 0;
            const Partition* only = nullptr;
            for (const ReportEntry& e : report.entries)
                if (e.twice_s == st.twice_s && e.nu > 0) {
                    support.push_back(
                        {{"lambda", partition_json(e.lambda)}, {"nu", e.nu}});
                    ++count;
                    only = &e.lambda;
                }
            rec["verdict"] = count == 0 ? "none" : (st.definite ? "definite" : "broken");
            if (st.definite && only) {
                rec["lambda"] = partition_json(*only);
                rec["statistics"] = statistics_name(*only, n);
            }
            rec["support"] = support;
            spins.push_back(rec);
        }
        j["spins"] = spins;
        os << j.dump() << "\n";
    } else if (fmt == Format::csv) {
        os << "twice_s,spin,verdict,lambda,nu\n";
        for (const SpinStatus& st : report.spin_status) {
            int count = 0;
            for (const ReportEntry& e : report.entries)
                if (e.twice_s == st.twice_s && e.nu > 0) ++count;
            const std::string verdict =
                count == 0 ? "none" : (st.definite ? "definite" : "broken");
            bool emitted = false;
            for (const ReportEntry& e : report.entries)
                if (e.twice_s == st.twice_s && e.nu > 0) {
                    os << st.twice_s.twice << ',' << st.twice_s.str() << ',' << verdict
                       << ',' << csv_field(e.lambda.str()) << ',' << e.nu << "\n";
                    emitted = true;
                }
            if (!emitted)
                os << st.twice_s.twice << ',' << st.twice_s.str() << ',' << verdict
                   << ",,0\n";
        }
    } else {
        os << "classify f=" << f.str() << "  n=" << n << "\n";
        if (report.spin_status.empty()) os << "  no admissible spin\n";
        for (const SpinStatus& st : report.spin_status) {
            os << "  s=" << st.twice_s.str() << ": ";
            std::vector<const ReportEntry*> support;
            for (const ReportEntry& e : report.entries)
                if (e.twice_s == st.twice_s && e.nu > 0) support.push_back(&e);
            if (support.empty()) {
                os << "no representations\n";
            } else if (st.definite) {
                os << "definite " << statistics_name(support[0]->lambda, n)
                   << " (lambda=" << support[0]->lambda.str() << ")\n";
            } else {
                os << "broken statistics:";
                for (const ReportEntry* e : support)
                    os << "  " << e->lambda.str() << ":" << e->nu;
                os << "\n";
            }
        }
    }
    return emit(os.str(), out_path, out, err);
}

// ---------------------------------------------------------------------------
// verify

struct Divergence {
    std::string kind;
    Partition f;
    int n = 0;
    int twice_s = -1;
    Partition lambda;
    long long engine = 0, oracle = 0;
    std::string detail;
};

struct SumRuleFailure {
    Partition f;
    int n = 0;
    int twice_s = 0;
    long long nu_sum = 0, lr_value = 0;
};

struct DimFinding {
    Partition f;
    int n = 0;
    long long equal_spin = 0, zero_weight = 0;
};

struct VerifyTaskResult {
    int problems = 0;
    double max_engine_residue = 0, max_oracle_residue = 0;
    std::vector<Divergence> divergences;
    std::vector<SumRuleFailure> weighted_failures;
    std::vector<SumRuleFailure> unweighted_failures;
    // gating: the semistandard count of the zero-weight space must match the
    // LR-side count over all spin tuples
    int decomposition_failures = 0;
    // adjudicated: the equal-spin sum alone misses mixed-spin constituents
    std::vector<DimFinding> equal_spin_dim_failures;
    int dimension_checks = 0;
};

VerifyTaskResult verify_one(const Partition& f, int n, const QuadratureSpec& spec,
                            double tolerance) {
    VerifyTaskResult res;
    const std::vector<TwiceSpin> spins = admissible_spins(f, n);
    const std::vector<Partition> lambdas = partitions_of(n, n);

    long long dim_lhs = 0;
    if (!spins.empty()) {
        const auto per_spin_classes = class_integrals_multi(f, n, spins, spec);
        for (std::size_t si = 0; si < spins.size(); ++si) {
            const TwiceSpin s = spins[si];
            long long nu_sum = 0, weighted = 0;
            for (const Partition& lambda : lambdas) {
                const Problem problem(f, n, s, lambda);
                EngineValue ev;
                try {
                    ev = nu_value(problem);
                } catch (const NonIntegerResult& ex) {
                    res.divergences.push_back({"NonIntegerResult", f, n, s.twice, lambda,
                                               0, 0, ex.what()});
                    continue;
                }
                const OracleValue ov = assemble_nu(lambda, n, per_spin_classes[si]);
                ++res.problems;
                res.max_engine_residue = std::max(res.max_engine_residue, ev.residue);
                res.max_oracle_residue = std::max(res.max_oracle_residue, ov.residue);
                if (ov.residue >= tolerance) {
                    res.divergences.push_back({"NonIntegerResult", f, n, s.twice, lambda,
                                               ev.nu, ov.nu,
                                               "oracle residue " + std::to_string(ov.residue)});
                } else if (ev.nu != ov.nu) {
                    res.divergences.push_back(
                        {"EngineOracleMismatch", f, n, s.twice, lambda, ev.nu, ov.nu, ""});
                }
                nu_sum += ev.nu;
                weighted += sn_dimension(lambda) * ev.nu;
                dim_lhs += ipow(s.twice + 1, n) * sn_dimension(lambda) * ev.nu;
            }
            const long long lr_value = nu_sum_weighted(f, n, s);
            if (weighted != lr_value)
                res.weighted_failures.push_back({f, n, s.twice, weighted, lr_value});
            if (nu_sum != lr_value)
                res.unweighted_failures.push_back({f, n, s.twice, nu_sum, lr_value});
        }
    }
    ++res.dimension_checks;
    const long long zw = zero_weight_dim(f, n);
    if (zw != zero_weight_lr_dim(f, n)) ++res.decomposition_failures;
    if (dim_lhs != zw) res.equal_spin_dim_failures.push_back({f, n, dim_lhs, zw});
    return res;
}

int cmd_verify(int max_boxes, std::vector<int> n_list, int nodes, double tolerance,
               int jobs, Format fmt, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
    for (int n : n_list)
        if (n < 2 || n > 12) throw std::invalid_argument("verify needs 2 <= n <= 12");
    if (max_boxes < 0) throw std::invalid_argument("--max-boxes must be >= 0");

    const QuadratureSpec spec{resolve_nodes(nodes), tolerance};

    std::vector<std::pair<int, Partition>> tasks;
    for (int n : n_list)
        for (int k = 0; k <= max_boxes; ++k)
            for (const Partition& f : partitions_of(k, 2 * n))
                tasks.emplace_back(n, f);

    std::vector<VerifyTaskResult> results(tasks.size());
    std::atomic<std::size_t> next{0};
    if (jobs <= 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            results[i] = verify_one(tasks[i].second, tasks[i].first, spec, tolerance);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // deterministic order: reduce in task order
    VerifyTaskResult total;
    for (const VerifyTaskResult& r : results) {
        total.problems += r.problems;
        total.max_engine_residue = std::max(total.max_engine_residue, r.max_engine_residue);
        total.max_oracle_residue = std::max(total.max_oracle_residue, r.max_oracle_residue);
        total.divergences.insert(total.divergences.end(), r.divergences.begin(),
                                 r.divergences.end());
        total.weighted_failures.insert(total.weighted_failures.end(),
                                       r.weighted_failures.begin(),
                                       r.weighted_failures.end());
        total.unweighted_failures.insert(total.unweighted_failures.end(),
                                         r.unweighted_failures.begin(),
                                         r.unweighted_failures.end());
        total.decomposition_failures += r.decomposition_failures;
        total.equal_spin_dim_failures.insert(total.equal_spin_dim_failures.end(),
                                             r.equal_spin_dim_failures.begin(),
                                             r.equal_spin_dim_failures.end());
        total.dimension_checks += r.dimension_checks;
    }

    const bool consistent = total.divergences.empty() &&
                            total.weighted_failures.empty() &&
                            total.decomposition_failures == 0;

    std::ostringstream os;
    if (fmt == Format::json) {
        ojson j;
        j["command"] = "verify";
        j["max_boxes"] = max_boxes;
        j["n_list"] = n_list;
        j["tableaux"] = tasks.size();
        j["problems"] = total.problems;
        j["engine_oracle_mismatches"] =
            static_cast<int>(total.divergences.size());
        if (!total.divergences.empty()) {
            const Divergence& d = total.divergences.front();
            j["first_divergence"] = {{"kind", d.kind},
                                     {"f", partition_json(d.f)},
                                     {"n", d.n},
                                     {"twice_s", d.twice_s},
                                     {"lambda", partition_json(d.lambda)},
                                     {"engine", d.engine},
                                     {"oracle", d.oracle},
                                     {"detail", d.detail}};
        }
        j["weighted_sum_failures"] = static_cast<int>(total.weighted_failures.size());
        j["unweighted_sum_failures"] =
            static_cast<int>(total.unweighted_failures.size());
        ojson uf = ojson::array();
        for (const SumRuleFailure& s : total.unweighted_failures)
            uf.push_back({{"f", partition_json(s.f)},
                          {"n", s.n},
                          {"twice_s", s.twice_s},
                          {"nu_sum", s.nu_sum},
                          {"lr_value", s.lr_value}});
        j["unweighted_failures"] = uf;
        j["sum_rule"] = total.weighted_failures.empty()
                            ? "d_lambda-weighted rule holds"
                            : "d_lambda-weighted rule FAILS";
        j["dimension_checks"] = total.dimension_checks;
        j["zero_weight_decomposition_failures"] = total.decomposition_failures;
        j["equal_spin_dimension_failures"] =
            static_cast<int>(total.equal_spin_dim_failures.size());
        ojson ef = ojson::array();
        for (const DimFinding& d : total.equal_spin_dim_failures)
            ef.push_back({{"f", partition_json(d.f)},
                          {"n", d.n},
                          {"equal_spin_dim", d.equal_spin},
                          {"zero_weight_dim", d.zero_weight}});
        j["equal_spin_dimension_findings"] = ef;
        j["max_engine_residue"] = total.max_engine_residue;
        j["max_oracle_residue"] = total.max_oracle_residue;
        j["status"] = consistent ? "ok" : "mismatch";
        os << j.dump() << "\n";
    } else if (fmt == Format::csv) {
        os << "status,tableaux,problems,mismatches,weighted_failures,unweighted_failures,"
              "decomposition_failures,equal_spin_dim_failures\n"
           << (consistent ? "ok" : "mismatch") << ',' << tasks.size() << ','
           << total.problems << ',' << total.divergences.size() << ','
           << total.weighted_failures.size() << ',' << total.unweighted_failures.size()
           << ',' << total.decomposition_failures << ','
           << total.equal_spin_dim_failures.size() << "\n";
    } else {
        os << "verify |f| <= " << max_boxes << ", n in {";
        for (std::size_t i = 0; i < n_list.size(); ++i)
            os << (i ? "," : "") << n_list[i];
        os << "}: " << total.problems << " problems over " << tasks.size()
           << " tableaux\n";
        os << "  engine == oracle: "
           << (total.divergences.empty() ? "yes" : "NO") << "\n";
        if (!total.divergences.empty()) {
            const Divergence& d = total.divergences.front();
            os << "  first divergence: " << d.kind << " at f=" << d.f.str()
               << " n=" << d.n << " 2s=" << d.twice_s << " lambda=" << d.lambda.str()
               << " engine=" << d.engine << " oracle=" << d.oracle << " " << d.detail
               << "\n";
        }
        os << "  weighted sum rule (sum d_lambda nu = LR): "
           << (total.weighted_failures.empty() ? "holds everywhere" : "FAILS") << "\n";
        os << "  unweighted sum rule (sum nu = LR): ";
        if (total.unweighted_failures.empty()) {
            os << "holds everywhere\n";
        } else {
            const SumRuleFailure& s = total.unweighted_failures.front();
            os << total.unweighted_failures.size()
               << " failure(s); first: f=" << s.f.str() << " n=" << s.n
               << " 2s=" << s.twice_s << " (sum nu = " << s.nu_sum
               << ", LR = " << s.lr_value << ")\n";
        }
        os << "  zero-weight decomposition (SSYT count = LR tuple count): "
           << (total.decomposition_failures == 0 ? "holds" : "FAILS") << " ("
           << total.dimension_checks << " tableaux)\n";
        os << "  equal-spin dimension identity (sum (2s+1)^n d nu = zero-weight dim): ";
        if (total.equal_spin_dim_failures.empty()) {
            os << "holds everywhere\n";
        } else {
            const DimFinding& d = total.equal_spin_dim_failures.front();
            os << total.equal_spin_dim_failures.size()
               << " failure(s) from mixed-spin constituents; first: f=" << d.f.str()
               << " n=" << d.n << " (" << d.equal_spin << " != " << d.zero_weight
               << ")\n";
        }
        os << "  max residues: engine " << total.max_engine_residue << ", oracle "
           << total.max_oracle_residue << "\n";
        os << "result: " << (consistent ? "OK" : "MISMATCH") << "\n";
    }
    const int rc = emit(os.str(), out_path, out, err);
    if (rc != 0) return rc;
    return consistent ? 0 : 2;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact spin-statistics multiplicities for SU(2n) tableaux"};
    app.name("spinstat");
    app.require_subcommand(1);

    std::string f_text, lambda_text, out_path;
    int n = 0, twice_s = -1, nodes = 0, max_boxes = 0, jobs = 0;
    double tolerance = 1e-6;
    bool as_json = false, as_csv = false, with_oracle = false;
    std::vector<int> n_list;

    auto add_format = [&](CLI::App* sub) {
        sub->add_flag("--json", as_json, "machine-readable JSON output");
        sub->add_flag("--csv", as_csv, "CSV output");
        sub->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* nu_cmd = app.add_subcommand("nu", "one multiplicity nu(f, s lambda)");
    nu_cmd->add_option("--f", f_text, "tableau f, e.g. 3,2,1")->required();
    nu_cmd->add_option("--n", n, "number of particles")->required();
    nu_cmd->add_option("--twice-s", twice_s, "2s (exact half-integer spin)")->required();
    nu_cmd->add_option("--lambda", lambda_text, "S_n label; partition of n, or sym/antisym")
        ->required();
    nu_cmd->add_flag("--oracle", with_oracle, "cross-check against the character integral");
    nu_cmd->add_option("--nodes", nodes, "quadrature nodes per variable");
    nu_cmd->add_option("--tolerance", tolerance, "rounding residue bound");
    add_format(nu_cmd);

    CLI::App* table_cmd = app.add_subcommand("table", "full (s, lambda) table for f, n");
    table_cmd->add_option("--f", f_text, "tableau f")->required();
    table_cmd->add_option("--n", n, "number of particles")->required();
    add_format(table_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "per-spin statistics verdict for f, n");
    classify_cmd->add_option("--f", f_text, "tableau f")->required();
    classify_cmd->add_option("--n", n, "number of particles")->required();
    add_format(classify_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "sweep engine vs character-integral oracle");
    verify_cmd->add_option("--max-boxes", max_boxes, "largest |f| to sweep")->required();
    verify_cmd->add_option("--n", n_list, "particle counts, e.g. 2,3")
        ->required()
        ->delimiter(',');
    verify_cmd->add_option("--nodes", nodes, "quadrature nodes per variable");
    verify_cmd->add_option("--tolerance", tolerance, "rounding residue bound");
    verify_cmd->add_option("--jobs", jobs, "worker threads (default: hardware)");
    add_format(verify_cmd);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (as_json && as_csv) {
        err << "error: --json and --csv are mutually exclusive\n";
        return 1;
    }
    const Format fmt = as_json ? Format::json : (as_csv ? Format::csv : Format::pretty);
    if (tolerance <= 0) {
        err << "error: --tolerance must be positive\n";
        return 1;
    }

    try {
        if (app.got_subcommand(verify_cmd))
            return cmd_verify(max_boxes, n_list, nodes, tolerance, jobs, fmt, out_path,
                              out, err);

        const Partition f = Partition::parse(f_text);
        if (n < 2 || n > 12) {
            err << "error: need 2 <= n <= 12\n";
            return 1;
        }
        if (f.rows() > 2 * n) {
            err << "error: tableau f may have at most 2n rows\n";
            return 1;
        }
        if (app.got_subcommand(nu_cmd)) {
            const Partition lambda = parse_lambda(lambda_text, n);
            return cmd_nu(f, n, twice_s, lambda, with_oracle, nodes, tolerance, fmt,
                          out_path, out, err);
        }
        if (app.got_subcommand(table_cmd))
            return cmd_table(f, n, fmt, out_path, out, err);
        return cmd_classify(f, n, fmt, out_path, out, err);
    } catch (const NonIntegerResult& e) {
        err << "verification error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace spinstat
