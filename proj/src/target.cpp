#include "madlat/target.hpp"

#include <fstream>
#include <sstream>

namespace madlat {

CertifiedReal TargetVector::row_dot(int i, const std::vector<Int>& q) const {
    if (q.size() != static_cast<size_t>(n)) throw std::domain_error("row_dot: length mismatch");
    CertifiedReal acc(0L);
    for (int j = 0; j < n; ++j) {
        if (q[j] == 0) continue;
        acc += at(i, j) * CertifiedReal(q[j]);
    }
    return acc;
}

bool TargetVector::all_exact() const {
    for (const auto& e : entries)
        if (!e.is_exact()) return false;
    return true;
}

TargetVector TargetVector::transposed() const {
    std::vector<CertifiedReal> e(entries.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e[static_cast<size_t>(j) * m + i] = at(i, j);
    return TargetVector(n, m, std::move(e));
}

CertifiedReal parse_entry(const std::string& line) {
    std::istringstream ss(line);
    std::string kind;
    ss >> kind;
    if (kind == "rational") {
        std::string v;
        if (!(ss >> v)) throw ParseError("rational entry needs a value: " + line);
        return CertifiedReal(rat_parse(v));
    }
    if (kind == "quad") {
        std::string a, b, c, D;
        if (!(ss >> a >> b >> c >> D)) throw ParseError("quad entry needs a b c D: " + line);
        try {
            return CertifiedReal(Quad(Int(a), Int(b), Int(c), Int(D)));
        } catch (const std::invalid_argument&) {
            throw ParseError("quad entry: bad integer in " + line);
        }
    }
    if (kind == "dec") {
        std::string v;
        if (!(ss >> v)) throw ParseError("dec entry needs digits: " + line);
        return CertifiedReal(rat_from_decimal(v));
    }
    throw ParseError("unknown entry kind '" + kind + "' in: " + line);
}

std::vector<CertifiedReal> parse_entries(std::istream& in) {
    std::vector<CertifiedReal> out;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back(parse_entry(line.substr(first)));
    }
    return out;
}

TargetVector parse_target_file(const std::string& path, int m, int n) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open target file: " + path);
    auto entries = parse_entries(in);
    return TargetVector(m, n, std::move(entries));
}

std::string entry_to_string(const CertifiedReal& x) {
    if (const Rat* r = x.rat()) return "rational " + rat_to_string(*r);
    if (const Quad* q = x.quad())
        return "quad " + q->a.get_str() + " " + q->b.get_str() + " " + q->c.get_str() + " " + q->D.get_str();
    return "dec " + x.decimal(24);
}

}  // namespace madlat
