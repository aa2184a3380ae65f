#include "simlearn/io/csv_out.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "simlearn/core/errors.hpp"

namespace simlearn {

std::string format_double(double v) {
    if (std::isnan(v)) return "";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    // Shortest representation that parses back to the same double.
    for (int precision = 1; precision <= 17; ++precision) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trials_csv(const std::string& path, const std::vector<TrialRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("write_trials_csv: cannot open '" + path + "'");
    out << "trial,true_sigma,proxy_dist_x,proxy_dist_y,"
           "simple_prediction,simple_rel_err_pct,simple_abs_over_eps,"
           "queryopt_prediction,queryopt_rel_err_pct,queryopt_abs_over_eps\n";
    for (std::size_t t = 0; t < records.size(); ++t) {
        const auto& r = records[t];
        out << t << ',' << format_double(r.true_sigma) << ','
            << format_double(r.proxy_dist_x) << ',' << format_double(r.proxy_dist_y)
            << ',' << format_double(r.simple_prediction) << ','
            << format_double(r.simple_rel_err_pct) << ','
            << format_double(r.simple_abs_over_eps) << ','
            << format_double(r.queryopt_prediction) << ','
            << format_double(r.queryopt_rel_err_pct) << ','
            << format_double(r.queryopt_abs_over_eps) << '\n';
    }
    if (!out) throw DataError("write_trials_csv: write to '" + path + "' failed");
}

namespace {

void write_learner_bins(std::ofstream& out, const std::string& learner,
                        const std::string& scale, const Histogram& hist) {
    for (std::size_t b = 0; b < hist.counts.size(); ++b) {
        out << learner << ',' << scale << ',' << b << ','
            << format_double(hist.edges[b]) << ',' << format_double(hist.edges[b + 1])
            << ',' << hist.counts[b] << '\n';
    }
}

}  // namespace

void write_histograms_csv(const std::string& path, const ErrorSummary& summary) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("write_histograms_csv: cannot open '" + path + "'");
    out << "learner,scale,bin,lower,upper,count\n";
    if (summary.simple) {
        write_learner_bins(out, "simple", "rel_err_pct", summary.simple->rel_err_pct.hist);
        write_learner_bins(out, "simple", "abs_over_eps",
                           summary.simple->abs_over_eps.hist);
    }
    if (summary.queryopt) {
        write_learner_bins(out, "queryopt", "rel_err_pct",
                           summary.queryopt->rel_err_pct.hist);
        write_learner_bins(out, "queryopt", "abs_over_eps",
                           summary.queryopt->abs_over_eps.hist);
    }
    if (!out) throw DataError("write_histograms_csv: write to '" + path + "' failed");
}

}  // namespace simlearn
