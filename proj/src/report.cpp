#include "addiso/report.hpp"

#include <sstream>

#include "addiso/errors.hpp"

namespace addiso {

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv) os << k << ": " << v << "\n";
    return os.str();
}

Report Report::parse(const std::string& text) {
    Report r;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto pos = line.find(": ");
        if (pos == std::string::npos)
            fail(Errc::Parse, "line " + std::to_string(lineno) + ", col 1: expected 'key: value'");
        r.kv.emplace_back(line.substr(0, pos), line.substr(pos + 2));
    }
    return r;
}

}  // namespace addiso
