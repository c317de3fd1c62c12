#pragma once

#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace zhardy {

// One emitted result row. Parameter fields left NaN render as empty CSV
// cells and are omitted from JSON. meta carries `key=value` pairs joined by
// ';' and always starts with the schema marker.
struct OutputRecord {
    std::string quantity;
    double T = std::numeric_limits<double>::quiet_NaN();
    double H = std::numeric_limits<double>::quiet_NaN();
    double k = std::numeric_limits<double>::quiet_NaN();
    double U = std::numeric_limits<double>::quiet_NaN();
    double phi = std::numeric_limits<double>::quiet_NaN();
    double value = 0.0;
    double err = std::numeric_limits<double>::quiet_NaN();
    std::string meta = "schema=1";
};

// 15 significant digits, '.' decimal separator (C locale), shortest form.
std::string fmt_g15(double x);

// Header `quantity,T,H,k,U,phi,value,err,meta`, LF line endings.
void write_csv(const std::vector<OutputRecord>& records, std::ostream& os);

// Full-provenance JSON: schema, command echo, code version, records.
void write_json(const std::vector<OutputRecord>& records, const std::string& command,
                std::ostream& os);

}  // namespace zhardy
