#include "xfc/matrix.hpp"

#include <sstream>

#include <json.hpp>

namespace xfc {

namespace {

std::string value_to_string(const Rat& v) { return rat_to_string(v); }
std::string value_to_string(double v) { return format_double(v); }

void value_from_string(const std::string& s, Rat& out) { out = rat_from_string(s); }
void value_from_string(const std::string& s, double& out) {
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        if (pos != s.size()) throw ParseError("trailing characters in number '" + s + "'");
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad number '" + s + "'");
    }
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

template <typename T>
std::string csv_impl(const PartialMatrix<T>& m) {
    std::ostringstream out;
    for (const auto& l : m.col_labels()) out << ',' << l;
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out << m.row_labels()[r];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << ',';
            out << (m.is_defined(r, c) ? value_to_string(m.at(r, c)) : std::string("NA"));
        }
        out << '\n';
    }
    return out.str();
}

template <typename T>
PartialMatrix<T> csv_parse_impl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    do {
        if (!std::getline(in, line)) throw ParseError("empty matrix CSV");
    } while (line.empty() || line[0] == '#');
    auto header = split_csv_line(line);
    if (header.empty()) throw ParseError("bad matrix CSV header");
    std::vector<std::string> col_labels(header.begin() + 1, header.end());
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto parts = split_csv_line(line);
        if (parts.size() != col_labels.size() + 1)
            throw ParseError("row " + std::to_string(lineno) + " has " +
                             std::to_string(parts.size() - 1) + " cells, expected " +
                             std::to_string(col_labels.size()));
        row_labels.push_back(parts[0]);
        cells.emplace_back(parts.begin() + 1, parts.end());
    }
    PartialMatrix<T> m(row_labels, col_labels);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const std::string& s = cells[r][c];
            if (s == "NA") {
                m.set_undefined(r, c);
            } else {
                T v;
                try {
                    value_from_string(s, v);
                } catch (const ParseError& e) {
                    throw ParseError("row " + std::to_string(r + 1) + ", col " +
                                     std::to_string(c + 1) + ": " + e.what());
                }
                m.set(r, c, std::move(v));
            }
        }
    return m;
}

template <typename T>
std::string json_impl(const PartialMatrix<T>& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.row_labels();
    j["cols"] = m.col_labels();
    auto& values = j["values"] = nlohmann::json::array();
    auto& mask = j["mask"] = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json vrow = nlohmann::ordered_json::array();
        nlohmann::ordered_json mrow = nlohmann::ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.is_defined(r, c)) {
                vrow.push_back(value_to_string(m.at(r, c)));
                mrow.push_back(true);
            } else {
                vrow.push_back(nullptr);
                mrow.push_back(false);
            }
        }
        values.push_back(vrow);
        mask.push_back(mrow);
    }
    return j.dump();
}

}  // namespace

RealMatrix to_real(const RatMatrix& m) {
    RealMatrix out(m.row_labels(), m.col_labels());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.is_defined(r, c))
                out.set(r, c, to_double(m.at(r, c)));
            else
                out.set_undefined(r, c);
        }
    return out;
}

std::string matrix_to_csv(const RatMatrix& m) { return csv_impl(m); }
std::string matrix_to_csv(const RealMatrix& m) { return csv_impl(m); }
RatMatrix rat_matrix_from_csv(const std::string& text) { return csv_parse_impl<Rat>(text); }
RealMatrix real_matrix_from_csv(const std::string& text) {
    return csv_parse_impl<double>(text);
}

std::string matrix_to_json(const RatMatrix& m) { return json_impl(m); }
std::string matrix_to_json(const RealMatrix& m) { return json_impl(m); }

RatMatrix rat_matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("values"))
        throw ParseError("matrix JSON needs rows/cols/values");
    RatMatrix m(j["rows"].get<std::vector<std::string>>(),
                j["cols"].get<std::vector<std::string>>());
    const auto& values = j["values"];
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const auto& cell = values.at(r).at(c);
            if (cell.is_null())
                m.set_undefined(r, c);
            else
                m.set(r, c, rat_from_string(cell.get<std::string>()));
        }
    return m;
}

}  // namespace xfc
