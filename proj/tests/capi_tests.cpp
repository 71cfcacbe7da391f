// Exercises the shared library strictly through the C header.
#include "qpart.h"

#include <cstdio>
#include <cstring>

static int g_failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            ++g_failures;                                                   \
            std::fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
        }                                                                   \
    } while (0)

static void test_verify() {
    qpart_result* r = nullptr;
    EXPECT(qpart_verify("i", 25, &r) == QPART_OK);
    EXPECT(r != nullptr);
    EXPECT(qpart_result_passed(r) == 1);
    EXPECT(std::strstr(qpart_result_text(r), "[equal]") != nullptr);
    EXPECT(std::strstr(qpart_result_json(r), "\"case\"") != nullptr);
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_verify("all", 20, &r) == QPART_OK);
    EXPECT(qpart_result_json(r)[0] == '[');
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_verify("mock9", 20, &r) == QPART_OK);
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_verify("rank", 20, &r) == QPART_OK);
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_verify("bogus", 10, &r) == QPART_ERR_USAGE);
    EXPECT(r == nullptr);
    EXPECT(std::strlen(qpart_last_error()) > 0);

    r = nullptr;
    EXPECT(qpart_verify("i", -1, &r) == QPART_ERR_USAGE);
    EXPECT(qpart_verify("i", qpart_max_order() + 1, &r) == QPART_ERR_USAGE);
    EXPECT(qpart_verify(nullptr, 10, &r) == QPART_ERR_USAGE);
    EXPECT(qpart_verify("i", 10, nullptr) == QPART_ERR_USAGE);
}

static void test_involution() {
    qpart_result* r = nullptr;
    EXPECT(qpart_involution("franklin", 12, 0, &r) == QPART_OK);
    EXPECT(qpart_result_passed(r) == 1);
    EXPECT(std::strstr(qpart_result_text(r), "0 violations") != nullptr);
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_involution("paths", 10, 7, &r) == QPART_OK);
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_involution("unknown", 10, 0, &r) == QPART_ERR_USAGE);
    EXPECT(qpart_involution("franklin", 61, 0, &r) == QPART_ERR_USAGE);
    EXPECT(qpart_involution(nullptr, 10, 0, &r) == QPART_ERR_USAGE);
}

static void test_diagram() {
    const int parts[] = {8, 7, 5};
    qpart_result* r = nullptr;
    EXPECT(qpart_diagram(parts, 3, "odd", &r) == QPART_OK);
    EXPECT(std::strcmp(qpart_result_text(r), "2 2 2 2\n2 2 2 1\n2 2 1") == 0);
    EXPECT(std::strstr(qpart_result_json(r), "odd-restricted") != nullptr);
    qpart_result_free(r);

    const int repeated_odd[] = {3, 3};
    r = nullptr;
    EXPECT(qpart_diagram(repeated_odd, 2, "odd", &r) == QPART_ERR_USAGE);
    EXPECT(r == nullptr);
    EXPECT(qpart_diagram(repeated_odd, 2, "even", &r) == QPART_OK);
    qpart_result_free(r);

    const int increasing[] = {1, 2};
    r = nullptr;
    EXPECT(qpart_diagram(increasing, 2, "odd", &r) == QPART_ERR_USAGE);
    EXPECT(qpart_diagram(parts, 3, "diagonal", &r) == QPART_ERR_USAGE);
    EXPECT(qpart_diagram(nullptr, 3, "odd", &r) == QPART_ERR_USAGE);
    EXPECT(qpart_diagram(nullptr, 0, "odd", &r) == QPART_OK); // empty diagram
    qpart_result_free(r);
}

static void test_catalog() {
    qpart_result* r = nullptr;
    EXPECT(qpart_catalog(8, &r) == QPART_OK);
    EXPECT(qpart_result_passed(r) == 1);
    EXPECT(std::strstr(qpart_result_text(r), "13") != nullptr);
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_catalog(0, &r) == QPART_ERR_USAGE);
    EXPECT(qpart_catalog(61, &r) == QPART_ERR_USAGE);
}

static void test_enumerate() {
    qpart_result* r = nullptr;
    EXPECT(qpart_enumerate(8, "distinct", &r) == QPART_OK);
    EXPECT(std::strstr(qpart_result_json(r), "\"count\": 6") != nullptr);
    int lines = 1;
    for (const char* c = qpart_result_text(r); *c; ++c)
        if (*c == '\n') ++lines;
    EXPECT(lines == 6);
    qpart_result_free(r);

    r = nullptr;
    EXPECT(qpart_enumerate(5, "no-such-family", &r) == QPART_ERR_USAGE);
    EXPECT(qpart_enumerate(-1, "all", &r) == QPART_ERR_USAGE);
    EXPECT(qpart_enumerate(5, nullptr, &r) == QPART_ERR_USAGE);
}

int main() {
    test_verify();
    test_involution();
    test_diagram();
    test_catalog();
    test_enumerate();
    if (g_failures == 0) {
        std::printf("capi_tests: all checks passed\n");
        return 0;
    }
    std::fprintf(stderr, "capi_tests: %d failures\n", g_failures);
    return 1;
}
