#include "nogo/machine_format.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nogo/errors.hpp"

namespace nogo {
namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_number(const std::string& token, int line) {
    const std::string t = trim(token);
    if (t.empty()) throw ParseError(line, "expected a number");
    try {
        std::size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size())
            throw ParseError(line, "trailing characters after number '" + t + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError(line, "not a number: '" + t + "'");
    }
}

Complex parse_pair(const std::string& token, int line) {
    const auto parts = split(token, ',');
    if (parts.size() != 2)
        throw ParseError(line, "expected 're,im', got '" + trim(token) + "'");
    return Complex{parse_number(parts[0], line), parse_number(parts[1], line)};
}

std::vector<Complex> parse_amplitudes(const std::string& value, int line) {
    std::vector<Complex> amps;
    for (const auto& segment : split(value, ';')) amps.push_back(parse_pair(segment, line));
    return amps;
}

struct AmplitudeLine {
    int line = 0;
    std::vector<Complex> amps;
};

}  // namespace

Machine parse_machine(std::istream& in) {
    std::optional<QubitBasis> basis;
    std::map<std::string, AmplitudeLine> entries;

    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected 'name = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = line.substr(eq + 1);

        if (key == "basis") {
            if (basis) throw ParseError(line_no, "duplicate basis");
            const auto parts = split(value, ',');
            if (parts.size() != 2) throw ParseError(line_no, "basis needs 'phi,gamma'");
            basis = QubitBasis{parse_number(parts[0], line_no), parse_number(parts[1], line_no)};
        } else if (key == "blank" || key == "0" || key == "1" || key == "psi" ||
                   key == "psibar") {
            if (entries.count(key)) throw ParseError(line_no, "duplicate " + key);
            entries.emplace(key, AmplitudeLine{line_no, parse_amplitudes(value, line_no)});
        } else if (key.empty()) {
            throw ParseError(line_no, "missing name before '='");
        } else {
            throw ParseError(line_no, "unknown name '" + key + "'");
        }
    }

    if (!basis) throw InputError("machine definition has no basis line");
    const auto blank_it = entries.find("blank");
    if (blank_it == entries.end()) throw InputError("machine definition has no blank line");

    const std::size_t ancilla_dim = blank_it->second.amps.size();
    const auto make_state = [ancilla_dim](const AmplitudeLine& e) {
        if (e.amps.size() != ancilla_dim)
            throw ParseError(e.line, "expected " + std::to_string(ancilla_dim) +
                                         " amplitude pairs, got " +
                                         std::to_string(e.amps.size()));
        try {
            return StateVector(e.amps, {ancilla_dim});
        } catch (const InputError& err) {
            throw ParseError(e.line, err.what());
        }
    };

    Machine m(ancilla_dim, make_state(blank_it->second), *basis);
    static const std::pair<const char*, MachineLabel> kImageKeys[] = {
        {"0", MachineLabel::Zero},
        {"1", MachineLabel::One},
        {"psi", MachineLabel::Psi},
        {"psibar", MachineLabel::PsiBar},
    };
    for (const auto& [name, label] : kImageKeys) {
        const auto it = entries.find(name);
        if (it != entries.end()) m.set_image(label, make_state(it->second));
    }
    return m;
}

Machine parse_machine_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open machine file: " + path);
    return parse_machine(in);
}

}  // namespace nogo
