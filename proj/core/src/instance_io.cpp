#include "cbp/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cbp {

Instance parse_instance(std::istream& in, const std::string& label) {
    InstanceBuilder builder;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        std::string name, size_text;
        if (!(fields >> name >> size_text)) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected '<color> <num>/<den>'");
        }
        std::string rest;
        if (fields >> rest && rest[0] != '#') {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": trailing tokens after size");
        }
        Rational size = parse_rational(size_text);
        if (size < Rational(0) || size > Rational(1)) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": size " +
                                        size_text + " outside [0,1]");
        }
        builder.add(name, size);
    }
    Instance inst = builder.take();
    inst.label = label;
    return inst;
}

Instance parse_instance_text(const std::string& text, const std::string& label) {
    std::istringstream in(text);
    return parse_instance(in, label);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance file: " + path);
    }
    return parse_instance(in, path);
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    for (const Item& item : inst.items) {
        out << inst.color_name(item.color) << ' ' << to_string(item.size) << '\n';
    }
    return out.str();
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write instance file: " + path);
    }
    out << format_instance(inst);
}

}  // namespace cbp
