// Copyright 2026 The PCE Channels Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pce/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace pce::io {

namespace {

int read_qubit_count(const Json& doc) {
    if (!doc.contains("n") || !doc["n"].is_number_integer()) {
        throw ParseError("channel document needs an integer \"n\"");
    }
    const int n = doc["n"].get<int>();
    if (n < 1 || n > kMaxQubits) {
        throw ParseError("\"n\" must be in 1.." + std::to_string(kMaxQubits));
    }
    return n;
}

std::complex<double> read_entry(const Json& e) {
    if (e.is_number()) {
        return {e.get<double>(), 0.0};
    }
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("matrix entries must be [re, im] pairs");
    }
    return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace

PceMap parse_channel(const Json& doc) {
    if (!doc.is_object()) {
        throw ParseError("channel document must be a JSON object");
    }
    const int n = read_qubit_count(doc);
    const bool has_preserved = doc.contains("preserved");
    const bool has_basis = doc.contains("basis");
    if (has_preserved == has_basis) {
        throw ParseError("channel document needs exactly one of \"preserved\" or \"basis\"");
    }
    const Json& list = has_preserved ? doc["preserved"] : doc["basis"];
    if (!list.is_array()) {
        throw ParseError("\"preserved\"/\"basis\" must be an array of strings");
    }
    std::vector<MultiIndex> items;
    for (const Json& s : list) {
        if (!s.is_string()) {
            throw ParseError("\"preserved\"/\"basis\" entries must be strings");
        }
        const std::string text = s.get<std::string>();
        MultiIndex a = has_preserved ? MultiIndex::parse(text) : MultiIndex::parse_bits(text);
        if (a.num_qubits() != n) {
            throw ParseError("entry \"" + text + "\" does not have " + std::to_string(n) + " qubits");
        }
        items.push_back(a);
    }
    if (has_basis) {
        return PceMap::from_subspace(Subspace::span(n, items));
    }
    return PceMap::from_preserved(n, items);
}

Json channel_to_json(const PceMap& map) {
    Json doc;
    doc["n"] = map.num_qubits();
    Json list = Json::array();
    if (map.subspace()) {
        for (const MultiIndex& b : map.subspace()->basis()) {
            list.push_back(b.bit_str());
        }
        doc["basis"] = std::move(list);
    } else {
        for (const MultiIndex& a : map.preserved()) {
            list.push_back(a.str());
        }
        doc["preserved"] = std::move(list);
    }
    return doc;
}

DissipativeProcess parse_process(const Json& doc) {
    if (!doc.is_object() || !doc.contains("terms") || !doc["terms"].is_array()) {
        throw ParseError("process document needs a \"terms\" array");
    }
    std::vector<DissipationTerm> terms;
    for (const Json& t : doc["terms"]) {
        if (!t.is_object() || !t.contains("alpha") || !t["alpha"].is_string() || !t.contains("gamma") ||
            !t["gamma"].is_number()) {
            throw ParseError("each term needs a string \"alpha\" and a numeric \"gamma\"");
        }
        terms.push_back({MultiIndex::parse(t["alpha"].get<std::string>()), t["gamma"].get<double>()});
    }
    try {
        return DissipativeProcess(std::move(terms));
    } catch (const Error& e) {
        throw ParseError(std::string("invalid process: ") + e.what());
    }
}

Json process_to_json(const DissipativeProcess& process) {
    Json terms = Json::array();
    for (const DissipationTerm& t : process.terms()) {
        terms.push_back({{"alpha", t.label.str()}, {"gamma", round_significant(t.rate)}});
    }
    return {{"terms", std::move(terms)}};
}

ComplexMatrix parse_density_matrix(const Json& doc) {
    const Json& body = (doc.is_object() && doc.contains("rho")) ? doc["rho"] : doc;
    if (!body.is_array() || body.empty()) {
        throw ParseError("density matrix must be a non-empty array");
    }
    std::vector<std::complex<double>> entries;
    const bool nested = body[0].is_array() && !body[0].empty() && body[0][0].is_array();
    if (nested) {
        for (const Json& row : body) {
            if (!row.is_array() || row.size() != body.size()) {
                throw ParseError("nested density matrix rows must all have length " + std::to_string(body.size()));
            }
            for (const Json& e : row) {
                entries.push_back(read_entry(e));
            }
        }
    } else {
        for (const Json& e : body) {
            entries.push_back(read_entry(e));
        }
    }
    Eigen::Index dim = 0;
    while (dim * dim < static_cast<Eigen::Index>(entries.size())) {
        ++dim;
    }
    if (dim * dim != static_cast<Eigen::Index>(entries.size()) || dim < 2 || (dim & (dim - 1)) != 0) {
        throw ParseError("density matrix must have 4^n entries");
    }
    ComplexMatrix rho(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            rho(i, j) = entries[static_cast<std::size_t>(i * dim + j)];
        }
    }
    return rho;
}

Json density_matrix_to_json(const ComplexMatrix& rho) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < rho.cols(); ++j) {
            out.push_back({round_significant(rho(i, j).real()), round_significant(rho(i, j).imag())});
        }
    }
    return out;
}

std::vector<MultiIndex> reading_order(int n) {
    check_qubit_count(n);
    std::vector<MultiIndex> out;
    out.reserve(index_space_size(n));
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        out.push_back(MultiIndex::from_word(n, w));
    }
    std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) { return a.str() < b.str(); });
    return out;
}

Json components_to_json(const RealVector& r) {
    int n = 1;
    while (static_cast<Eigen::Index>(index_space_size(n)) < r.size()) {
        ++n;
    }
    if (static_cast<Eigen::Index>(index_space_size(n)) != r.size()) {
        throw DimensionError("component vector length must be 4^n");
    }
    Json out = Json::object();
    for (std::uint32_t w = 0; w < index_space_size(n); ++w) {
        out[MultiIndex::from_word(n, w).str()] = round_significant(r(w));
    }
    return out;
}

std::string format_number(double x) {
    if (x == 0) {
        return "0";  // no "-0"
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

double round_significant(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace pce::io
