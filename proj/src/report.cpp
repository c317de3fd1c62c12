#include "zhardy/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "zhardy/types.hpp"

namespace zhardy {

std::string fmt_g15(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

namespace {
void put_cell(std::ostream& os, double x) {
    if (!std::isnan(x)) os << fmt_g15(x);
    os << ',';
}
}  // namespace

void write_csv(const std::vector<OutputRecord>& records, std::ostream& os) {
    os << "quantity,T,H,k,U,phi,value,err,meta\n";
    for (const auto& r : records) {
        os << r.quantity << ',';
        put_cell(os, r.T);
        put_cell(os, r.H);
        put_cell(os, r.k);
        put_cell(os, r.U);
        put_cell(os, r.phi);
        os << fmt_g15(r.value) << ',';
        if (!std::isnan(r.err)) os << fmt_g15(r.err);
        os << ',' << r.meta << '\n';
    }
}

void write_json(const std::vector<OutputRecord>& records, const std::string& command,
                std::ostream& os) {
    nlohmann::json j;
    j["schema"] = 1;
    j["command"] = command;
    j["version"] = kVersion;
    auto& rows = j["records"] = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json row;
        row["quantity"] = r.quantity;
        auto put = [&row](const char* key, double x) {
            if (!std::isnan(x)) row[key] = x;
        };
        put("T", r.T);
        put("H", r.H);
        put("k", r.k);
        put("U", r.U);
        put("phi", r.phi);
        row["value"] = r.value;
        put("err", r.err);
        row["meta"] = r.meta;
        rows.push_back(row);
    }
    os << j.dump(2) << "\n";
}

}  // namespace zhardy
