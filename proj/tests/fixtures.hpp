#pragma once

// Hand-built fixture pairs for the 24 inconsistency types: for each type at
// least two pairs that must fire it and two adjacent pairs that must not.

#include <string>
#include <vector>

namespace test_support {

struct Fixture {
    int type_id;
    bool positive;
    const char* name;
    const char* ref;
    const char* cand;
    std::vector<std::string> repo_symbols = {};
};

inline const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> all = {
        // ----------------------------------------------------- type 1
        {1, true, "snake-vs-camel-assignment",
         "def f(x):\n    author_name = x.strip()\n    return author_name\n",
         "def f(x):\n    authorName = x.strip()\n    return authorName\n"},
        {1, true, "snake-vs-camel-parameter",
         "def f(max_count):\n    return max_count * 2\n",
         "def f(maxCount):\n    return maxCount * 2\n"},
        {1, false, "same-convention-different-words",
         "def f(x):\n    author_name = x.strip()\n    return author_name\n",
         "def f(x):\n    writer_name = x.strip()\n    return writer_name\n"},
        {1, false, "identical-camel-names",
         "def f(x):\n    authorName = x.strip()\n    return authorName\n",
         "def f(x):\n    authorName = x.rstrip()\n    return authorName\n"},

        // ----------------------------------------------------- type 2
        {2, true, "slice-colon-space",
         "def gen(response, start, end):\n    yield response[start:end]\n",
         "def gen(response, start, end):\n    yield response[start: end]\n"},
        {2, true, "plus-operator-space",
         "def check(base_name, prefix):\n"
         "    return base_name.startswith(prefix + \"-\")\n",
         "def check(base_name, prefix):\n"
         "    return base_name.startswith(prefix+\"-\")\n"},
        {2, false, "identical-spacing",
         "def f(a, b):\n    return a + b\n",
         "def f(a, b):\n    return a + b\n"},
        {2, false, "different-operators-same-style",
         "def f(a, b):\n    x = a + b\n    return x\n",
         "def f(a, b):\n    x = a - b\n    return x\n"},

        // ----------------------------------------------------- type 3
        {3, true, "blank-separator-missing",
         "def f(a):\n    x = a + 1\n\n    return x\n",
         "def f(a):\n    x = a + 1\n    return x\n"},
        {3, true, "blank-separator-count",
         "def f(a):\n    x = a + 1\n\n\n    return x\n",
         "def f(a):\n    x = a + 1\n\n    return x\n"},
        {3, false, "same-blank-separators",
         "def f(a):\n    x = a + 1\n\n    return x\n",
         "def f(a):\n    x = a + 2\n\n    return x\n"},
        {3, false, "blank-difference-in-unaligned-region",
         "def f(a):\n    x = a + 1\n\n    return x\n",
         "def f(a):\n    x = a + 1\n    for i in range(3):\n        x += i\n"
         "    return x\n"},

        // ----------------------------------------------------- type 4
        {4, true, "intermediate-vs-inline-return",
         "def f(a, b):\n    return a + b\n",
         "def f(a, b):\n    result = a + b\n    return result\n"},
        {4, true, "intermediate-vs-inline-condition",
         "def f(items):\n    if len(items) > 0:\n        return items[0]\n"
         "    return None\n",
         "def f(items):\n    count = len(items)\n    if count > 0:\n"
         "        return items[0]\n    return None\n"},
        {4, false, "both-use-intermediate",
         "def f(a, b):\n    result = a + b\n    return result\n",
         "def f(a, b):\n    result = a + b\n    return result\n"},
        {4, false, "variable-used-twice",
         "def f(a, b):\n    return a + b\n",
         "def f(a, b):\n    r = a + b\n    print(r)\n    return r\n"},

        // ----------------------------------------------------- type 5
        {5, true, "interline-comment-one-side",
         "def f(a):\n    # scale the input\n    return a * 2\n",
         "def f(a):\n    return a * 2\n"},
        {5, true, "commented-out-code-one-side",
         "def f(a):\n    # explain the scale step\n    return a * 2\n",
         "def f(a):\n    # x = compute(a)\n    return a * 2\n"},
        {5, false, "both-interline-comments",
         "def f(a):\n    # scale the input\n    return a * 2\n",
         "def f(a):\n    # double the value\n    return a * 2\n"},
        {5, false, "no-comments-either-side",
         "def f(a):\n    return a * 2\n",
         "def f(a):\n    return a * 3\n"},

        // ----------------------------------------------------- type 6
        {6, true, "call-split-across-lines",
         "def f(items):\n    total = sum(items) + max(items) + min(items)\n"
         "    return total\n",
         "def f(items):\n    total = (sum(items) +\n             max(items) +\n"
         "             min(items))\n    return total\n"},
        {6, true, "backslash-continuation",
         "def f(a, b, c):\n    value = a + b + c\n    return value\n",
         "def f(a, b, c):\n    value = a + \\\n        b + \\\n        c\n"
         "    return value\n"},
        {6, false, "both-single-line",
         "def f(a, b):\n    value = a + b\n    return value\n",
         "def f(a, b):\n    value = b + a\n    return value\n"},
        {6, false, "both-multi-line",
         "def f(items):\n    total = (sum(items) +\n             max(items))\n"
         "    return total\n",
         "def f(items):\n    total = (sum(items) +\n             min(items))\n"
         "    return total\n"},

        // ----------------------------------------------------- type 7
        {7, true, "descriptive-vs-single-letter-loop",
         "def f(items):\n    for index in range(len(items)):\n"
         "        print(index)\n",
         "def f(items):\n    for i in range(len(items)):\n        print(i)\n"},
        {7, true, "descriptive-vs-generic-temp",
         "def f(values):\n    running_total = sum(values)\n"
         "    return running_total\n",
         "def f(values):\n    temp = sum(values)\n    return temp\n"},
        {7, false, "both-descriptive",
         "def f(items):\n    for index in range(len(items)):\n"
         "        print(index)\n",
         "def f(items):\n    for position in range(len(items)):\n"
         "        print(position)\n"},
        {7, false, "both-generic",
         "def f(items):\n    for i in range(len(items)):\n        print(i)\n",
         "def f(items):\n    for j in range(len(items)):\n        print(j)\n"},

        // ----------------------------------------------------- type 8
        {8, true, "one-sided-todo",
         "def f(x):\n    return x\n",
         "def f(x):\n    # TODO: handle None\n    return x\n"},
        {8, true, "comment-detail-buckets",
         "def f(total, values):\n    total = sum(values)  # add\n"
         "    return total\n",
         "def f(total, values):\n    total = sum(values)  # accumulate every "
         "value of the incoming list into one grand total\n    return total\n"},
        {8, false, "both-todo",
         "def f(x):\n    # TODO: handle None\n    return x\n",
         "def f(x):\n    # TODO: validate input\n    return x\n"},
        {8, false, "same-detail-bucket",
         "def f(total, values):\n    total = sum(values)  # add them\n"
         "    return total\n",
         "def f(total, values):\n    total = sum(values)  # sum values\n"
         "    return total\n"},

        // ----------------------------------------------------- type 9
        {9, true, "augmented-vs-standard",
         "def f(x):\n    x += 1\n    return x\n",
         "def f(x):\n    x = x + 1\n    return x\n"},
        {9, true, "tuple-vs-separate",
         "def f():\n    a, b = 1, 2\n    return a + b\n",
         "def f():\n    a = 1\n    b = 2\n    return a + b\n"},
        {9, false, "both-augmented",
         "def f(x):\n    x += 1\n    return x\n",
         "def f(x):\n    x += 2\n    return x\n"},
        {9, false, "different-targets-no-overlap",
         "def f(x, z):\n    x += 1\n    return x\n",
         "def f(x, z):\n    y = z + 1\n    return y\n"},

        // ----------------------------------------------------- type 10
        {10, true, "ifexp-vs-if-statement",
         "def f(a, b):\n    return a if a > b else b\n",
         "def f(a, b):\n    if a > b:\n        return a\n    return b\n"},
        {10, true, "ifexp-assignment-vs-if-statement",
         "def f(x, default):\n    value = x if x else default\n"
         "    return value\n",
         "def f(x, default):\n    if x:\n        value = x\n    else:\n"
         "        value = default\n    return value\n"},
        {10, false, "both-ifexp",
         "def f(a, b):\n    return a if a > b else b\n",
         "def f(a, b):\n    return b if b >= a else a\n"},
        {10, false, "both-if-statements",
         "def f(a, b):\n    if a > b:\n        return a\n    return b\n",
         "def f(a, b):\n    if b >= a:\n        return b\n    return a\n"},

        // ----------------------------------------------------- type 11
        {11, true, "gt-vs-ge",
         "def f(a):\n    if len(a) > 1:\n        return True\n    return False\n",
         "def f(a):\n    if len(a) >= 2:\n        return True\n    return False\n"},
        {11, true, "lt-vs-le",
         "def f(x):\n    while x < 10:\n        x += 1\n    return x\n",
         "def f(x):\n    while x <= 9:\n        x += 1\n    return x\n"},
        {11, false, "non-equivalent-bounds",
         "def f(a):\n    if len(a) > 1:\n        return True\n    return False\n",
         "def f(a):\n    if len(a) > 3:\n        return True\n    return False\n"},
        {11, false, "different-left-expressions",
         "def f(a, b):\n    if len(a) > 1:\n        return True\n    return False\n",
         "def f(a, b):\n    if len(b) >= 2:\n        return True\n    return False\n"},

        // ----------------------------------------------------- type 12
        {12, true, "comprehension-vs-append-loop",
         "def f(values):\n    result = [v * 2 for v in values]\n"
         "    return result\n",
         "def f(values):\n    result = []\n    for v in values:\n"
         "        result.append(v * 2)\n    return result\n"},
        {12, true, "dict-literal-vs-constructor",
         "def f():\n    mapping = {}\n    mapping[\"a\"] = 1\n    print(mapping)\n",
         "def f():\n    mapping = dict()\n    mapping[\"a\"] = 1\n"
         "    print(mapping)\n"},
        {12, false, "both-comprehensions",
         "def f(values):\n    result = [v * 2 for v in values]\n"
         "    return result\n",
         "def f(values):\n    result = [w + w for w in values]\n"
         "    return result\n"},
        {12, false, "different-roles",
         "def f(xs, ys):\n    xs = [1, 2]\n    print(xs)\n",
         "def f(xs, ys):\n    ys = [1, 2]\n    print(ys)\n"},

        // ----------------------------------------------------- type 13
        {13, true, "repo-call-vs-builtin",
         "def f(prefix, file):\n    return match_file_by_prefix(prefix, file)\n",
         "def f(prefix, file):\n    return file.startswith(prefix + \"-\")\n",
         {"match_file_by_prefix"}},
        {13, true, "builtin-vs-hand-rolled-loop",
         "def f(xs):\n    return sum(xs)\n",
         "def f(xs):\n    total = 0\n    for x in xs:\n        total += x\n"
         "    return total\n"},
        {13, false, "same-builtin-both-sides",
         "def f(a):\n    if len(a) > 1:\n        return a\n    return None\n",
         "def f(a):\n    if len(a) > 1:\n        return a\n    return []\n"},
        {13, false, "same-repo-call-both-sides",
         "def f(prefix, file):\n    return match_file_by_prefix(prefix, file)\n",
         "def f(prefix, file):\n    ok = match_file_by_prefix(prefix, file)\n"
         "    return ok\n",
         {"match_file_by_prefix"}},

        // ----------------------------------------------------- type 14
        {14, true, "comprehension-one-side",
         "def f(values):\n    result = [v * 2 for v in values]\n"
         "    return result\n",
         "def f(values):\n    result = []\n    for v in values:\n"
         "        result.append(v * 2)\n    return result\n"},
        {14, true, "with-statement-one-side",
         "def f(path):\n    with open(path) as fh:\n        data = fh.read()\n"
         "    return data\n",
         "def f(path):\n    fh = open(path)\n    data = fh.read()\n"
         "    fh.close()\n    return data\n"},
        {14, false, "both-comprehension",
         "def f(values):\n    return [v * 2 for v in values]\n",
         "def f(values):\n    return [v + v for v in values]\n"},
        {14, false, "no-advanced-features",
         "def f(a):\n    return a + 1\n",
         "def f(a):\n    return 1 + a\n"},

        // ----------------------------------------------------- type 15
        {15, true, "assignment-and-loop-swapped",
         "def f(xs):\n    limit = 10\n    for x in xs:\n        print(x)\n"
         "    return limit\n",
         "def f(xs):\n    for x in xs:\n        print(x)\n    limit = 10\n"
         "    return limit\n"},
        {15, true, "import-position-swapped",
         "def f(path):\n    import os\n    base = os.path.basename(path)\n"
         "    return base\n",
         "def f(path):\n    base = path.split(\"/\")[-1]\n    import os\n"
         "    return os.path.basename(base)\n"},
        {15, false, "same-order",
         "def f(xs):\n    limit = 10\n    for x in xs:\n        print(x)\n"
         "    return limit\n",
         "def f(xs):\n    limit = 20\n    for x in xs:\n        print(x)\n"
         "    return limit\n"},
        {15, false, "group-missing-on-one-side",
         "def f(xs):\n    limit = 10\n    for x in xs:\n        print(x)\n"
         "    return limit\n",
         "def f(xs):\n    for x in xs:\n        print(x)\n    return 10\n"},

        // ----------------------------------------------------- type 16
        {16, true, "for-vs-while",
         "def f(xs):\n    for x in xs:\n        print(x)\n",
         "def f(xs):\n    i = 0\n    while i < len(xs):\n        print(xs[i])\n"
         "        i += 1\n"},
        {16, true, "for-else-vs-plain-for",
         "def f(xs, key):\n    for x in xs:\n        if x == key:\n"
         "            return x\n    else:\n        return None\n",
         "def f(xs, key):\n    for x in xs:\n        if x == key:\n"
         "            return x\n    return None\n"},
        {16, false, "both-for-loops",
         "def f(xs):\n    for x in xs:\n        print(x)\n",
         "def f(xs):\n    for y in xs:\n        print(y)\n"},
        {16, false, "both-while-loops",
         "def f(n):\n    while n > 0:\n        n -= 1\n    return n\n",
         "def f(n):\n    while n > 0:\n        n -= 2\n    return n\n"},

        // ----------------------------------------------------- type 17
        {17, true, "combined-vs-nested-conditions",
         "def f(a, b):\n    if a and b:\n        return 1\n    return 0\n",
         "def f(a, b):\n    if a:\n        if b:\n            return 1\n"
         "    return 0\n"},
        {17, true, "guard-return-vs-if-else",
         "def f(x):\n    if x > 0:\n        return x\n    return -x\n",
         "def f(x):\n    if x > 0:\n        return x\n    else:\n"
         "        return -x\n"},
        {17, false, "both-combined",
         "def f(a, b):\n    if a and b:\n        return 1\n    return 0\n",
         "def f(a, b):\n    if b and a:\n        return 1\n    return 0\n"},
        {17, false, "both-nested",
         "def f(a, b):\n    if a:\n        if b:\n            return 1\n"
         "    return 0\n",
         "def f(a, b):\n    if b:\n        if a:\n            return 1\n"
         "    return 0\n"},

        // ----------------------------------------------------- type 18
        {18, true, "membership-guard-vs-try-except",
         "def f(d, key):\n    if key in d:\n        return d[key]\n"
         "    return None\n",
         "def f(d, key):\n    try:\n        return d[key]\n"
         "    except KeyError:\n        return None\n"},
        {18, true, "zero-guard-vs-try-except",
         "def f(a, b):\n    if b != 0:\n        return a / b\n    return None\n",
         "def f(a, b):\n    try:\n        return a / b\n"
         "    except ZeroDivisionError:\n        return None\n"},
        {18, false, "both-try-except",
         "def f(d, key):\n    try:\n        return d[key]\n"
         "    except KeyError:\n        return None\n",
         "def f(d, key):\n    try:\n        return d[key]\n"
         "    except KeyError:\n        return 0\n"},
        {18, false, "unrelated-guard-names",
         "def f(flag, items):\n    if flag:\n        return list(items)\n"
         "    return []\n",
         "def f(flag, items):\n    try:\n        return sorted(verbose)\n"
         "    except TypeError:\n        return []\n"},

        // ----------------------------------------------------- type 19
        {19, true, "candidate-validates-input",
         "def f(x):\n    return 10 / x\n",
         "def f(x):\n    if x is None:\n        raise ValueError(\"x is None\")\n"
         "    return 10 / x\n"},
        {19, true, "reference-validates-input",
         "def f(name):\n    if not name:\n        raise ValueError(\"empty\")\n"
         "    return name.title()\n",
         "def f(name):\n    return name.title()\n"},
        {19, false, "both-validate-input",
         "def f(x):\n    if x is None:\n        raise ValueError(\"x\")\n"
         "    return x * 2\n",
         "def f(x):\n    if x is None:\n        raise ValueError(\"bad x\")\n"
         "    return x * 2\n"},
        {19, false, "neither-validates",
         "def f(x):\n    return x * 2\n",
         "def f(x):\n    return 2 * x\n"},

        // ----------------------------------------------------- type 20
        {20, true, "candidate-adds-runtime-guard",
         "def f(path):\n    rows = read_rows(path)\n    return rows[0]\n",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        return None\n    return rows[0]\n"},
        {20, true, "reference-adds-runtime-guard",
         "def f(items):\n    total = sum(items)\n    if total == 0:\n"
         "        raise RuntimeError(\"no data\")\n    return total\n",
         "def f(items):\n    total = sum(items)\n    return total\n"},
        {20, false, "both-runtime-guard",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        return None\n    return rows[0]\n",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        return None\n    return rows[-1]\n"},
        {20, false, "neither-runtime-guard",
         "def f(path):\n    rows = read_rows(path)\n    return rows[0]\n",
         "def f(path):\n    rows = read_rows(path)\n    return rows[-1]\n"},

        // ----------------------------------------------------- type 21
        {21, true, "candidate-wraps-division",
         "def f(a, b):\n    return a / b\n",
         "def f(a, b):\n    try:\n        return a / b\n"
         "    except ZeroDivisionError:\n        return None\n"},
        {21, true, "reference-wraps-parse",
         "def f(text):\n    try:\n        return int(text)\n"
         "    except ValueError:\n        return 0\n",
         "def f(text):\n    return int(text)\n"},
        {21, false, "both-wrap",
         "def f(a, b):\n    try:\n        return a / b\n"
         "    except ZeroDivisionError:\n        return None\n",
         "def f(a, b):\n    try:\n        return a / b\n"
         "    except ZeroDivisionError:\n        return 0\n"},
        {21, false, "neither-wraps",
         "def f(a, b):\n    return a / b\n",
         "def f(a, b):\n    return b / a\n"},

        // ----------------------------------------------------- type 22
        {22, true, "sentinel-vs-raise",
         "def f(x):\n    if x is None:\n        return None\n    return x * 2\n",
         "def f(x):\n    if x is None:\n        raise TypeError(\"x\")\n"
         "    return x * 2\n"},
        {22, true, "different-exception-classes",
         "def f(x):\n    if x is None:\n        raise ValueError(\"x\")\n"
         "    return x * 2\n",
         "def f(x):\n    if x is None:\n        raise TypeError(\"x\")\n"
         "    return x * 2\n"},
        {22, false, "same-validation-style",
         "def f(x):\n    if x is None:\n        raise TypeError(\"x\")\n"
         "    return x * 2\n",
         "def f(x):\n    if x is None:\n        raise TypeError(\"bad\")\n"
         "    return x * 2\n"},
        {22, false, "validation-on-one-side-only",
         "def f(x):\n    return x * 2\n",
         "def f(x):\n    if x is None:\n        raise TypeError(\"x\")\n"
         "    return x * 2\n"},

        // ----------------------------------------------------- type 23
        {23, true, "runtime-sentinel-vs-raise",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        return None\n    return rows[0]\n",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        raise RuntimeError(\"no rows\")\n    return rows[0]\n"},
        {23, true, "runtime-exception-classes",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        raise ValueError(\"no rows\")\n    return rows[0]\n",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        raise RuntimeError(\"no rows\")\n    return rows[0]\n"},
        {23, false, "same-runtime-style",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        return None\n    return rows[0]\n",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        return None\n    return rows[-1]\n"},
        {23, false, "runtime-guard-one-side-only",
         "def f(path):\n    rows = read_rows(path)\n    return rows[0]\n",
         "def f(path):\n    rows = read_rows(path)\n    if not rows:\n"
         "        raise RuntimeError(\"no rows\")\n    return rows[0]\n"},

        // ----------------------------------------------------- type 24
        {24, true, "different-caught-classes",
         "def f(xs, i):\n    try:\n        return xs[i]\n"
         "    except IndexError:\n        return None\n",
         "def f(xs, i):\n    try:\n        return xs[i]\n"
         "    except KeyError:\n        return None\n"},
        {24, true, "reraise-vs-sentinel-handler",
         "def f(text):\n    try:\n        return int(text)\n"
         "    except ValueError:\n        raise RuntimeError(\"bad input\")\n",
         "def f(text):\n    try:\n        return int(text)\n"
         "    except ValueError:\n        return None\n"},
        {24, false, "identical-handlers",
         "def f(text):\n    try:\n        return int(text)\n"
         "    except ValueError:\n        return None\n",
         "def f(text):\n    try:\n        return int(text) + 1\n"
         "    except ValueError:\n        return None\n"},
        {24, false, "handler-on-one-side-only",
         "def f(text):\n    return int(text)\n",
         "def f(text):\n    try:\n        return int(text)\n"
         "    except ValueError:\n        return None\n"},
    };
    return all;
}

}  // namespace test_support
