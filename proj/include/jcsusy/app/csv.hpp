#pragma once

#include <optional>
#include <string>
#include <vector>

namespace jcsusy::app {

// In-memory CSV table: one header row, comma separated, '\n' line ends.
// Numbers use the shortest round-trip representation.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const noexcept { return rows_.size(); }
    const std::vector<std::string>& header() const noexcept { return header_; }

    std::string str() const;
    void write(const std::string& path) const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string cell(double x);
std::string cell(long x);
std::string cell(const std::optional<double>& x);  // empty when absent

}  // namespace jcsusy::app
