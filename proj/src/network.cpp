#include "lgv/network.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace lgv {

void Network::check_consistency() const {
    if (layers.empty()) throw DimensionError("network: no layers");
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const Layer& l = layers[k];
        if (l.weights.empty()) throw DimensionError("layer " + std::to_string(k) + ": empty weight matrix");
        const std::size_t cols = l.weights.front().size();
        for (const auto& row : l.weights) {
            if (row.size() != cols)
                throw DimensionError("layer " + std::to_string(k) + ": ragged weight matrix");
        }
        if (l.bias.size() != l.weights.size())
            throw DimensionError("layer " + std::to_string(k) + ": bias length does not match row count");
        if (k > 0 && cols != layers[k - 1].out_size())
            throw DimensionError("layer " + std::to_string(k) + ": input size " + std::to_string(cols) +
                                 " does not match previous layer output " +
                                 std::to_string(layers[k - 1].out_size()));
    }
}

namespace {

// Reads the next non-comment, non-blank line; returns false at EOF.
bool next_content_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

std::vector<double> parse_reals(const std::string& line, int line_no) {
    std::istringstream iss(line);
    std::vector<double> vals;
    double v;
    while (iss >> v) vals.push_back(v);
    if (!iss.eof())
        throw ParseError("line " + std::to_string(line_no) + ": expected real numbers, got '" + line + "'");
    return vals;
}

} // namespace

Network load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open network file: " + path);

    std::string line;
    int line_no = 0;
    if (!next_content_line(in, line, line_no)) throw ParseError("empty network file: " + path);

    std::istringstream header(line);
    long layer_count = 0;
    if (!(header >> layer_count) || layer_count < 1)
        throw ParseError("line " + std::to_string(line_no) + ": bad layer count in header");
    std::vector<std::size_t> widths;
    long w;
    while (header >> w) {
        if (w < 1) throw ParseError("line " + std::to_string(line_no) + ": non-positive layer width");
        widths.push_back(static_cast<std::size_t>(w));
    }
    if (widths.size() != static_cast<std::size_t>(layer_count) + 1)
        throw ParseError("line " + std::to_string(line_no) + ": header declares " + std::to_string(layer_count) +
                         " layers but lists " + std::to_string(widths.size()) + " widths");

    Network net;
    for (long k = 0; k < layer_count; ++k) {
        Layer layer;
        const std::size_t in_size = widths[k];
        const std::size_t out_size = widths[k + 1];
        for (std::size_t r = 0; r < out_size; ++r) {
            if (!next_content_line(in, line, line_no))
                throw DimensionError("layer " + std::to_string(k) + ": unexpected end of file reading weight row " +
                                     std::to_string(r));
            auto row = parse_reals(line, line_no);
            if (row.size() != in_size)
                throw DimensionError("layer " + std::to_string(k) + " (line " + std::to_string(line_no) +
                                     "): weight row has " + std::to_string(row.size()) + " entries, expected " +
                                     std::to_string(in_size));
            layer.weights.push_back(std::move(row));
        }
        if (!next_content_line(in, line, line_no))
            throw DimensionError("layer " + std::to_string(k) + ": unexpected end of file reading bias");
        layer.bias = parse_reals(line, line_no);
        if (layer.bias.size() != out_size)
            throw DimensionError("layer " + std::to_string(k) + " (line " + std::to_string(line_no) +
                                 "): bias has " + std::to_string(layer.bias.size()) + " entries, expected " +
                                 std::to_string(out_size));
        net.layers.push_back(std::move(layer));
    }
    net.check_consistency();
    return net;
}

std::vector<LabeledInput> load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dataset file: " + path);

    std::vector<LabeledInput> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream iss(line);
        std::string cell;
        LabeledInput row;
        bool first = true;
        while (std::getline(iss, cell, ',')) {
            try {
                std::size_t used = 0;
                double v = std::stod(cell, &used);
                if (first) {
                    row.label = static_cast<int>(std::lround(v));
                    if (row.label < 0)
                        throw ParseError("line " + std::to_string(line_no) + ": negative label");
                    first = false;
                } else {
                    if (v < 0.0 || v > 1.0)
                        throw ParseError("line " + std::to_string(line_no) +
                                         ": input value outside [0,1]: " + cell);
                    row.values.push_back(v);
                }
            } catch (const std::invalid_argument&) {
                throw ParseError("line " + std::to_string(line_no) + ": bad number '" + cell + "'");
            }
        }
        if (first || row.values.empty())
            throw ParseError("line " + std::to_string(line_no) + ": expected label,values...");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<double> forward(const Network& net, const std::vector<double>& x) {
    if (x.size() != net.input_dim())
        throw DimensionError("forward: input has " + std::to_string(x.size()) + " entries, network expects " +
                             std::to_string(net.input_dim()));
    std::vector<double> cur = x;
    for (std::size_t k = 0; k < net.layers.size(); ++k) {
        const Layer& layer = net.layers[k];
        std::vector<double> next(layer.out_size());
        for (std::size_t r = 0; r < layer.out_size(); ++r) {
            double acc = layer.bias[r];
            for (std::size_t c = 0; c < cur.size(); ++c) acc += layer.weights[r][c] * cur[c];
            next[r] = acc;
        }
        const bool last = (k + 1 == net.layers.size());
        if (!last) {
            for (double& v : next) v = std::max(0.0, v);
        }
        cur = std::move(next);
    }
    return cur;
}

std::optional<int> predict_label(const std::vector<double>& out) {
    if (out.empty()) throw DimensionError("predict_label: empty output");
    std::size_t best = 0;
    bool tie = false;
    for (std::size_t j = 1; j < out.size(); ++j) {
        if (out[j] > out[best]) {
            best = j;
            tie = false;
        } else if (out[j] == out[best]) {
            tie = true;
        }
    }
    if (tie) return std::nullopt;
    return static_cast<int>(best);
}

Box naive_interval_forward(const Network& net, const Box& box) {
    if (box.size() != net.input_dim())
        throw DimensionError("naive_interval_forward: box/network dimension mismatch");
    Box cur = box;
    for (std::size_t k = 0; k < net.layers.size(); ++k) {
        const Layer& layer = net.layers[k];
        Box next(layer.out_size());
        for (std::size_t r = 0; r < layer.out_size(); ++r) {
            Interval acc = Interval::point(layer.bias[r]);
            for (std::size_t c = 0; c < cur.size(); ++c)
                acc = add(acc, scale(layer.weights[r][c], cur[c]));
            next[r] = acc;
        }
        const bool last = (k + 1 == net.layers.size());
        if (!last) {
            for (Interval& v : next) v = relu(v);
        }
        cur = std::move(next);
    }
    return cur;
}

Box input_box(const LabeledInput& x, double eps, bool clip) {
    if (eps < 0.0) throw Error("input_box: negative eps");
    Box box(x.values.size());
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        double lo = x.values[i] - eps;
        double hi = x.values[i] + eps;
        if (clip) {
            lo = std::max(0.0, lo);
            hi = std::min(1.0, hi);
        }
        box[i] = {lo, hi};
    }
    return box;
}

} // namespace lgv
