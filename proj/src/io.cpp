#include "permpos/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace permpos {

namespace {

using nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<double>> grid_field(const ordered_json& j, const char* name, int n) {
    if (!j.contains(name) || !j[name].is_array() || static_cast<int>(j[name].size()) != n) {
        throw std::invalid_argument(std::string("expected field '") + name + "' with " + std::to_string(n) +
                                    " rows");
    }
    std::vector<std::vector<double>> rows;
    rows.reserve(n);
    for (const auto& row : j[name]) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw std::invalid_argument(std::string("field '") + name + "' must be an n-by-n grid");
        }
        rows.push_back(row.get<std::vector<double>>());
    }
    return rows;
}

ordered_json parse_checked(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, true);
    if (!j.is_object()) {
        throw std::invalid_argument("expected a JSON object");
    }
    return j;
}

int size_field(const ordered_json& j) {
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw std::invalid_argument("expected an integer field 'n'");
    }
    const int n = j["n"].get<int>();
    if (n <= 0) {
        throw std::invalid_argument("field 'n' must be positive");
    }
    return n;
}

}  // namespace

std::string dmatrix_to_json(const DMatrix& d) {
    const int n = d.size();
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < n; ++j) {
            row.push_back(d(i, j));
        }
        rows.push_back(std::move(row));
    }
    ordered_json out;
    out["n"] = n;
    out["d"] = std::move(rows);
    return out.dump();
}

DMatrix dmatrix_from_json(const std::string& text) {
    const ordered_json j = parse_checked(text);
    const int n = size_field(j);
    const auto rows = grid_field(j, "d", n);
    std::vector<double> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        entries.insert(entries.end(), row.begin(), row.end());
    }
    return DMatrix(n, std::move(entries));
}

DMatrix dmatrix_from_file(const std::string& path) {
    return dmatrix_from_json(read_file(path));
}

std::string hermitian_to_json(const HermitianMatrix& h) {
    const int n = h.size();
    ordered_json re = ordered_json::array();
    ordered_json im = ordered_json::array();
    for (int i = 0; i < n; ++i) {
        ordered_json re_row = ordered_json::array();
        ordered_json im_row = ordered_json::array();
        for (int j = 0; j < n; ++j) {
            re_row.push_back(h(i, j).real());
            im_row.push_back(h(i, j).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    ordered_json out;
    out["n"] = n;
    out["re"] = std::move(re);
    out["im"] = std::move(im);
    return out.dump();
}

HermitianMatrix hermitian_from_json(const std::string& text) {
    const ordered_json j = parse_checked(text);
    const int n = size_field(j);
    const auto re = grid_field(j, "re", n);
    const auto im = grid_field(j, "im", n);
    std::vector<std::complex<double>> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            entries[static_cast<std::size_t>(i) * n + k] = std::complex<double>(re[i][k], im[i][k]);
        }
    }
    return HermitianMatrix(n, std::move(entries));
}

HermitianMatrix hermitian_from_file(const std::string& path) {
    return hermitian_from_json(read_file(path));
}

std::string evidence_to_json(const SearchEvidence& evidence, VerdictKind kind) {
    ordered_json out;
    out["max_found"] = evidence.max_found;
    out["witness"] = evidence.witness;
    out["starts"] = evidence.starts;
    out["seed"] = evidence.seed;
    out["verdict"] = to_string(kind);
    return out.dump();
}

}  // namespace permpos
