#include "results_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

#include "error.hpp"
#include "io_util.hpp"

namespace dgcf {

namespace {

constexpr const char* kCsvHeader = "dataset,step,metric,value";

std::string format_value(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string format_fixed(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.2f", value);
    return buffer;
}

void check_writable_trace(const ExperimentTrace& trace) {
    bool any = false;
    for (const DatasetTrace& ds : trace.datasets) {
        if (ds.dataset_id.find_first_of(",\"\n\r") != std::string::npos) {
            raise(ErrorCode::InvalidArgument,
                  "dataset id '" + ds.dataset_id +
                      "' contains CSV delimiter characters");
        }
        any = any || !ds.per_step.empty();
    }
    if (!any) {
        raise(ErrorCode::InvalidArgument, "trace holds no step records");
    }
}

} // namespace

void write_results_csv(const ExperimentTrace& trace,
                       const std::string& path) {
    check_writable_trace(trace);
    std::string out = kCsvHeader;
    out += '\n';
    for (const DatasetTrace& ds : trace.datasets) {
        for (const StepRecord& record : ds.per_step) {
            for (const auto& [name, value] : record.metrics) {
                out += ds.dataset_id;
                out += ',';
                out += std::to_string(record.step);
                out += ',';
                out += name;
                out += ',';
                out += format_value(value);
                out += '\n';
            }
        }
    }
    write_text_file(path, out);
}

ExperimentTrace read_results_csv(const std::string& path) {
    std::string text = read_text_file(path);
    std::istringstream stream(text);
    std::string line;
    if (!std::getline(stream, line) || line != kCsvHeader) {
        raise(ErrorCode::ParseError,
              path + ": first line must be '" + kCsvHeader + "'");
    }
    ExperimentTrace trace;
    std::map<std::string, size_t> dataset_index;
    size_t line_no = 1;
    while (std::getline(stream, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                fields.push_back(line.substr(start));
                break;
            }
            fields.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        if (fields.size() != 4) {
            raise(ErrorCode::ParseError,
                  path + ": line " + std::to_string(line_no) +
                      ": expected 4 fields, got " +
                      std::to_string(fields.size()));
        }
        char* end = nullptr;
        unsigned long step = std::strtoul(fields[1].c_str(), &end, 10);
        if (end == fields[1].c_str() || *end != '\0') {
            raise(ErrorCode::ParseError,
                  path + ": line " + std::to_string(line_no) +
                      ": bad step '" + fields[1] + "'");
        }
        double value = std::strtod(fields[3].c_str(), &end);
        if (end == fields[3].c_str() || *end != '\0') {
            raise(ErrorCode::ParseError,
                  path + ": line " + std::to_string(line_no) +
                      ": bad value '" + fields[3] + "'");
        }

        auto [it, inserted] =
            dataset_index.insert({fields[0], trace.datasets.size()});
        if (inserted) {
            trace.datasets.push_back(DatasetTrace{fields[0], {}});
        }
        DatasetTrace& ds = trace.datasets[it->second];
        auto found = std::find_if(ds.per_step.begin(), ds.per_step.end(),
                                  [&](const StepRecord& r) {
                                      return r.step == step;
                                  });
        if (found == ds.per_step.end()) {
            ds.per_step.push_back(
                StepRecord{static_cast<uint32_t>(step), {}});
            found = std::prev(ds.per_step.end());
        }
        if (!found->metrics.insert({fields[2], value}).second) {
            raise(ErrorCode::ParseError,
                  path + ": line " + std::to_string(line_no) +
                      ": duplicate metric " + fields[2]);
        }
    }
    if (trace.datasets.empty()) {
        raise(ErrorCode::ParseError, path + ": no data rows");
    }
    return trace;
}

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 580.0;  // plot edge; legend sits to the right
constexpr double kTop = 40.0;
constexpr double kBottom = 392.0;

const char* kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
    "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22",
};

} // namespace

void render_trend_svg(const ExperimentTrace& trace, const std::string& path) {
    std::vector<StepRecord> means = aggregate_means(trace);

    double lo = means.front().metrics.begin()->second;
    double hi = lo;
    for (const StepRecord& record : means) {
        for (const auto& [name, value] : record.metrics) {
            (void)name;
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
    }
    double pad = (hi - lo) * 0.08;
    if (pad <= 0.0) {
        pad = std::max(std::abs(hi) * 0.08, 0.05);
    }
    lo -= pad;
    hi += pad;

    size_t steps = means.size();
    auto x_of = [&](size_t s) {
        if (steps == 1) {
            return (kLeft + kRight) / 2.0;
        }
        return kLeft + (kRight - kLeft) * static_cast<double>(s) /
                           static_cast<double>(steps - 1);
    };
    auto y_of = [&](double v) {
        return kBottom - (kBottom - kTop) * (v - lo) / (hi - lo);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           format_fixed(kWidth) + "\" height=\"" + format_fixed(kHeight) +
           "\" viewBox=\"0 0 " + format_fixed(kWidth) + " " +
           format_fixed(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + format_fixed(kLeft) +
           "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
           "metric means by deformation step</text>\n";

    // horizontal gridlines with value labels
    for (int tick = 0; tick <= 4; ++tick) {
        double v = lo + (hi - lo) * tick / 4.0;
        double y = y_of(v);
        svg += "<line x1=\"" + format_fixed(kLeft) + "\" y1=\"" +
               format_fixed(y) + "\" x2=\"" + format_fixed(kRight) +
               "\" y2=\"" + format_fixed(y) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        char label[40];
        std::snprintf(label, sizeof(label), "%.4g", v);
        svg += "<text x=\"" + format_fixed(kLeft - 8.0) + "\" y=\"" +
               format_fixed(y + 4.0) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" "
               "font-size=\"11\">" +
               label + "</text>\n";
    }
    // x axis with step labels
    svg += "<line x1=\"" + format_fixed(kLeft) + "\" y1=\"" +
           format_fixed(kBottom) + "\" x2=\"" + format_fixed(kRight) +
           "\" y2=\"" + format_fixed(kBottom) +
           "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    size_t stride = steps > 16 ? (steps + 15) / 16 : 1;
    for (size_t s = 0; s < steps; s += stride) {
        svg += "<text x=\"" + format_fixed(x_of(s)) + "\" y=\"" +
               format_fixed(kBottom + 18.0) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"11\">" +
               std::to_string(means[s].step) + "</text>\n";
    }
    svg += "<text x=\"" + format_fixed((kLeft + kRight) / 2.0) + "\" y=\"" +
           format_fixed(kBottom + 36.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">step</text>\n";

    size_t series = 0;
    for (const auto& [name, first_value] : means.front().metrics) {
        (void)first_value;
        const char* color = kPalette[series % 10];
        std::string points;
        for (size_t s = 0; s < steps; ++s) {
            if (s != 0) {
                points += ' ';
            }
            points += format_fixed(x_of(s)) + "," +
                      format_fixed(y_of(means[s].metrics.at(name)));
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
        for (size_t s = 0; s < steps; ++s) {
            svg += "<circle cx=\"" + format_fixed(x_of(s)) + "\" cy=\"" +
                   format_fixed(y_of(means[s].metrics.at(name))) +
                   "\" r=\"2.5\" fill=\"";
            svg += color;
            svg += "\"/>\n";
        }
        double ly = kTop + 16.0 * static_cast<double>(series);
        svg += "<line x1=\"" + format_fixed(kRight + 12.0) + "\" y1=\"" +
               format_fixed(ly) + "\" x2=\"" + format_fixed(kRight + 34.0) +
               "\" y2=\"" + format_fixed(ly) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + format_fixed(kRight + 40.0) + "\" y=\"" +
               format_fixed(ly + 4.0) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + name +
               "</text>\n";
        ++series;
    }
    svg += "</svg>\n";
    write_text_file(path, svg);
}

} // namespace dgcf
