/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "mseg/mseg.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                \
        }                                                              \
    } while (0)

static int text_is(const mseg_multisegment* m, const char* expected)
{
    char* s = NULL;
    int same;
    if (mseg_multisegment_text(m, &s) != MSEG_OK)
        return 0;
    same = strcmp(s, expected) == 0;
    mseg_string_free(s);
    return same;
}

static void test_handles(void)
{
    mseg_multisegment* m = NULL;
    mseg_multisegment* d = NULL;
    mseg_multisegment* e = NULL;
    size_t w = 0;

    EXPECT(mseg_multisegment_parse("[1,3]+[2,2]", &m) == MSEG_OK);
    EXPECT(mseg_multisegment_size(m) == 2);
    EXPECT(text_is(m, "[2,2]+[1,3]"));
    EXPECT(!mseg_multisegment_is_ladder(m));

    EXPECT(mseg_derive(m, &d) == MSEG_OK);
    EXPECT(text_is(d, "[2,3]"));
    mseg_multisegment_free(d);

    EXPECT(mseg_bz_derivative(m, 3, &d) == MSEG_OK);
    EXPECT(text_is(d, "[2,3]"));
    mseg_multisegment_free(d);

    EXPECT(mseg_extend(m, &e) == MSEG_OK);
    EXPECT(mseg_derive(e, &d) == MSEG_OK);
    EXPECT(mseg_multisegment_equal(d, m));
    mseg_multisegment_free(d);
    mseg_multisegment_free(e);

    EXPECT(mseg_dagger(m, &d) == MSEG_OK);
    EXPECT(text_is(d, "[-2,-2]+[-3,-1]"));
    mseg_multisegment_free(d);

    EXPECT(mseg_width(m, &w) == MSEG_OK);
    EXPECT(w == 2);

    d = (mseg_multisegment*)0x1;
    EXPECT(mseg_single_derivative(m, 0, &d) == MSEG_PRECONDITION_ERROR);
    EXPECT(strlen(mseg_last_error()) > 0);
    mseg_multisegment_free(m);

    m = NULL;
    EXPECT(mseg_multisegment_parse("[2,1]", &m) == MSEG_PARSE_ERROR);
    EXPECT(m == NULL);
    EXPECT(strstr(mseg_last_error(), "[2,1]") != NULL || strlen(mseg_last_error()) > 0);

    EXPECT(mseg_multisegment_parse("0", &m) == MSEG_OK);
    EXPECT(mseg_multisegment_size(m) == 0);
    EXPECT(text_is(m, "0"));
    mseg_multisegment_free(m);

    EXPECT(mseg_multisegment_parse(NULL, &m) == MSEG_PRECONDITION_ERROR);
    mseg_multisegment_free(NULL);
}

static void test_reports(void)
{
    mseg_report* r = NULL;
    const char* tuple[] = {"[2,2]", "[1,1]"};
    mseg_check_options opts;

    EXPECT(mseg_rsk_report("[1,1]+[1,2]", MSEG_RSK_WIDTH, &r) == MSEG_OK);
    EXPECT(strcmp(mseg_report_text(r), "[1,2] ; [1,1]\nwidth: 2\n") == 0);
    EXPECT(strstr(mseg_report_json(r), "\"status\":\"ok\"") != NULL);
    mseg_report_free(r);

    EXPECT(mseg_rsk_report("[2,1]", 0, &r) == MSEG_PARSE_ERROR);
    EXPECT(mseg_report_status(r) == MSEG_PARSE_ERROR);
    EXPECT(strstr(mseg_report_json(r), "parse_error") != NULL);
    mseg_report_free(r);

    EXPECT(mseg_gamma_report("[1,1]+[1,1]", 1, &r) == MSEG_OK);
    EXPECT(strstr(mseg_report_text(r), "shift: 1\n") != NULL);
    mseg_report_free(r);

    EXPECT(mseg_phi_report(tuple, 2, &r) == MSEG_OK);
    EXPECT(strstr(mseg_report_text(r), "Phi: 1\n") != NULL);
    mseg_report_free(r);

    EXPECT(mseg_specht_report("2,1,-1", "4,3,2|3,3,2|3,1", 0, &r) == MSEG_OK);
    EXPECT(strstr(mseg_report_text(r), "restricted: true\nproper: false\n") != NULL);
    mseg_report_free(r);

    EXPECT(mseg_specht_report("0,0", "2|1", MSEG_SPECHT_VERIFY_RSK, &r) == MSEG_PRECONDITION_ERROR);
    mseg_report_free(r);

    EXPECT(mseg_tableaux_report("2,2", 0, &r) == MSEG_OK);
    EXPECT(strstr(mseg_report_text(r), "count: 2\n") != NULL);
    mseg_report_free(r);

    mseg_check_options_init(&opts);
    opts.has_bounds = 1;
    opts.support_min = 0;
    opts.support_max = 0;
    opts.max_segments = 0;
    EXPECT(mseg_check_report("combi", &opts, &r) == MSEG_OK);
    mseg_report_free(r);

    opts.support_min = -1;
    opts.support_max = 1;
    opts.max_segments = 2;
    opts.mutate_ell_sign = 1;
    EXPECT(mseg_check_report("combi", &opts, &r) == MSEG_CHECK_FAILURE);
    EXPECT(strstr(mseg_report_text(r), "counterexample") != NULL);
    mseg_report_free(r);

    EXPECT(mseg_check_report("bogus", &opts, &r) == MSEG_PRECONDITION_ERROR);
    mseg_report_free(r);

    EXPECT(strcmp(mseg_status_name(MSEG_CHECK_FAILURE), "check_failure") == 0);
    EXPECT(strlen(mseg_version()) > 0);
}

int main(void)
{
    test_handles();
    test_reports();
    if (failures)
        fprintf(stderr, "%d failure(s)\n", failures);
    return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}
