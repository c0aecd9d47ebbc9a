#include "multifan/builders.hpp"
#include "multifan/errors.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace multifan {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break; // comment until end of line
        toks.push_back(t);
    }
    return toks;
}

long parse_long(const std::string& s, int lineno, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + s + "'");
    }
}

Int parse_bigint(const std::string& s, int lineno, const char* what) {
    // mpz accepts leading '+'/'-' and digits only; validate explicitly
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + s + "'");
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + s + "'");
    return Int(s);
}

} // namespace

MultiFan parse_fan(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    int rank = -1;
    std::vector<ZVec> rays;
    std::vector<int> ids;
    std::map<long, int> index_of_id;
    std::vector<Cone> cones;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "rank") {
            if (toks.size() != 2)
                throw ParseError("line " + std::to_string(lineno) + ": rank wants one value");
            if (rank >= 0)
                throw ParseError("line " + std::to_string(lineno) + ": rank given twice");
            rank = int(parse_long(toks[1], lineno, "rank"));
            if (rank < 1) throw ParseError("line " + std::to_string(lineno) + ": rank must be >= 1");
        } else if (kw == "ray") {
            if (rank < 0) throw ParseError("line " + std::to_string(lineno) + ": ray before rank");
            if (int(toks.size()) != 2 + rank)
                throw ParseError("line " + std::to_string(lineno) + ": ray wants id and " +
                                 std::to_string(rank) + " coordinates");
            long id = parse_long(toks[1], lineno, "ray id");
            if (index_of_id.count(id))
                throw ParseError("line " + std::to_string(lineno) + ": duplicate ray id " +
                                 std::to_string(id));
            ZVec v(rank);
            for (int i = 0; i < rank; ++i) v[i] = parse_bigint(toks[2 + i], lineno, "coordinate");
            index_of_id[id] = int(rays.size());
            rays.push_back(std::move(v));
            ids.push_back(int(id));
        } else if (kw == "cone") {
            if (rank < 0) throw ParseError("line " + std::to_string(lineno) + ": cone before rank");
            Cone c;
            c.wplus = 1;
            c.wminus = 0;
            size_t i = 1;
            for (; i < toks.size() && toks[i] != "w+" && toks[i] != "w-"; ++i) {
                long id = parse_long(toks[i], lineno, "cone ray id");
                auto it = index_of_id.find(id);
                if (it == index_of_id.end())
                    throw ParseError("line " + std::to_string(lineno) + ": unknown ray id " +
                                     std::to_string(id));
                c.rays.push_back(it->second);
            }
            while (i < toks.size()) {
                if (i + 1 >= toks.size())
                    throw ParseError("line " + std::to_string(lineno) + ": weight without value");
                if (toks[i] == "w+")
                    c.wplus = parse_long(toks[i + 1], lineno, "weight");
                else if (toks[i] == "w-")
                    c.wminus = parse_long(toks[i + 1], lineno, "weight");
                else
                    throw ParseError("line " + std::to_string(lineno) + ": unexpected token '" +
                                     toks[i] + "'");
                i += 2;
            }
            if (c.rays.empty())
                throw ParseError("line " + std::to_string(lineno) + ": cone without rays");
            cones.push_back(std::move(c));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    if (rank < 0) throw ParseError("missing rank line");
    try {
        return MultiFan(rank, std::move(rays), std::move(cones), std::move(ids));
    } catch (const Error& e) {
        throw ParseError(std::string("inconsistent fan data: ") + e.what());
    }
}

MultiFan from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open fan file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fan(ss.str());
}

std::string to_fan_text(const MultiFan& fan) {
    std::ostringstream os;
    os << "rank " << fan.rank() << "\n";
    for (int i = 0; i < fan.num_rays(); ++i) {
        os << "ray " << fan.ray_id(i);
        for (const Int& x : fan.ray(i)) os << " " << x.get_str();
        os << "\n";
    }
    for (const Cone& c : fan.cones()) {
        os << "cone";
        for (int r : c.rays) os << " " << fan.ray_id(r);
        os << " w+ " << c.wplus << " w- " << c.wminus << "\n";
    }
    return os.str();
}

void write_file(const MultiFan& fan, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write fan file: " + path);
    out << to_fan_text(fan);
}

std::string bytes_hash(const std::string& bytes) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file for hashing: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return bytes_hash(ss.str());
}

} // namespace multifan
