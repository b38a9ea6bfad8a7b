#pragma once

// Seeded generators shared by the property-style tests: random parseable
// functions and random raw text. Valid by construction, never executed.

#include <random>
#include <string>
#include <vector>

namespace test_support {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::string pick_of(Rng& rng, const std::vector<std::string>& pool) {
    return pool[static_cast<size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
}

inline std::string random_name(Rng& rng) {
    static const std::vector<std::string> pool = {
        "x", "y", "z", "i", "n", "total", "result", "value",
        "item", "data", "count", "acc", "items", "out"};
    return pick_of(rng, pool);
}

inline std::string random_expr(Rng& rng, int depth = 0) {
    switch (pick(rng, 0, depth > 1 ? 3 : 6)) {
        case 0: return random_name(rng);
        case 1: return std::to_string(pick(rng, 0, 99));
        case 2: return "len(" + random_name(rng) + ")";
        case 3: return "\"s" + std::to_string(pick(rng, 0, 9)) + "\"";
        case 4: return random_expr(rng, depth + 1) + " + " + random_expr(rng, depth + 1);
        case 5: return random_expr(rng, depth + 1) + " * " + random_expr(rng, depth + 1);
        default:
            return "(" + random_expr(rng, depth + 1) + ")";
    }
}

inline std::string random_cond(Rng& rng) {
    switch (pick(rng, 0, 4)) {
        case 0: return random_name(rng) + " > " + std::to_string(pick(rng, 0, 9));
        case 1: return random_name(rng) + " == " + std::to_string(pick(rng, 0, 9));
        case 2: return random_name(rng) + " is None";
        case 3: return random_name(rng) + " in " + random_name(rng);
        default:
            return "len(" + random_name(rng) + ") > " + std::to_string(pick(rng, 0, 9));
    }
}

inline void random_block(Rng& rng, std::string& out, int indent, int depth) {
    std::string ind(static_cast<size_t>(indent) * 4, ' ');
    int count = pick(rng, 1, depth >= 2 ? 2 : 4);
    for (int s = 0; s < count; ++s) {
        switch (pick(rng, 0, depth >= 2 ? 7 : 13)) {
            case 0:
                out += ind + random_name(rng) + " = " + random_expr(rng) + "\n";
                break;
            case 1:
                out += ind + random_name(rng) + " += " + std::to_string(pick(rng, 1, 5)) +
                       "\n";
                break;
            case 2:
                out += ind + "# note " + std::to_string(pick(rng, 0, 99)) + "\n";
                out += ind + random_name(rng) + " = " + random_expr(rng) + "\n";
                break;
            case 3:
                out += "\n";
                out += ind + random_name(rng) + " = " + random_expr(rng) + "\n";
                break;
            case 4:
                out += ind + "return " + random_expr(rng) + "\n";
                break;
            case 5:
                out += ind + "print(" + random_name(rng) + ")\n";
                break;
            case 6:
                out += ind + random_name(rng) + " = " + random_expr(rng) +
                       "  # trailing note\n";
                break;
            case 7:
                out += ind + random_name(rng) + " = [v for v in " + random_name(rng) +
                       "]\n";
                break;
            case 8: {
                out += ind + "if " + random_cond(rng) + ":\n";
                random_block(rng, out, indent + 1, depth + 1);
                if (pick(rng, 0, 1)) {
                    out += ind + "else:\n";
                    random_block(rng, out, indent + 1, depth + 1);
                }
                break;
            }
            case 9:
                out += ind + "for " + random_name(rng) + " in range(" +
                       std::to_string(pick(rng, 1, 9)) + "):\n";
                random_block(rng, out, indent + 1, depth + 1);
                break;
            case 10:
                out += ind + "while " + random_cond(rng) + ":\n";
                random_block(rng, out, indent + 1, depth + 1);
                break;
            case 11: {
                out += ind + "try:\n";
                random_block(rng, out, indent + 1, depth + 1);
                out += ind + "except ValueError:\n";
                random_block(rng, out, indent + 1, depth + 1);
                break;
            }
            case 12:
                out += ind + "with open(" + random_name(rng) + ") as fh:\n";
                random_block(rng, out, indent + 1, depth + 1);
                break;
            default:
                out += ind + "raise ValueError(\"bad value\")\n";
                break;
        }
    }
}

inline std::string random_function(Rng& rng) {
    std::string out = "def fn_" + std::to_string(pick(rng, 0, 999)) + "(";
    int params = pick(rng, 0, 3);
    for (int p = 0; p < params; ++p) {
        if (p) out += ", ";
        out += "arg" + std::to_string(p);
    }
    out += "):\n";
    if (pick(rng, 0, 2) == 0) out += "    \"\"\"Generated fixture.\"\"\"\n";
    random_block(rng, out, 1, 0);
    return out;
}

inline std::string random_text(Rng& rng) {
    static const char charset[] =
        "abcdefghij KLMNOP,.:=+*#([{}])'\"\t 0123456789";
    std::string out;
    int lines = pick(rng, 0, 8);
    for (int l = 0; l < lines; ++l) {
        int len = pick(rng, 0, 30);
        for (int c = 0; c < len; ++c)
            out += charset[static_cast<size_t>(
                pick(rng, 0, static_cast<int>(sizeof(charset)) - 2))];
        switch (pick(rng, 0, 3)) {
            case 0: out += "\r\n"; break;
            case 1: out += "\r"; break;
            default: out += "\n"; break;
        }
    }
    return out;
}

}  // namespace test_support
