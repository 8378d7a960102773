#include "jcsusy/app/csv.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jcsusy/app/config.hpp"
#include "jcsusy/numfmt.hpp"

namespace jcsusy::app {

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw std::logic_error("CsvTable: row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
    std::ostringstream os;
    auto emit = [&os](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << row[i];
        }
        os << '\n';
    };
    emit(header_);
    for (const auto& r : rows_) {
        emit(r);
    }
    return os.str();
}

void CsvTable::write(const std::string& path) const {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot write '" + path + "'");
    }
    out << str();
}

std::string cell(double x) { return format_double(x); }

std::string cell(long x) { return std::to_string(x); }

std::string cell(const std::optional<double>& x) { return x ? format_double(*x) : std::string(); }

}  // namespace jcsusy::app
