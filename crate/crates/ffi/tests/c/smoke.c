#include <stdio.h>
#include <string.h>

#include "qw22.h"

static int expect(int cond, const char *what) {
    if (!cond) {
        fprintf(stderr, "failed: %s\n", what);
    }
    return cond ? 0 : 1;
}

int main(void) {
    int bad = 0;
    Qw22Element *x = NULL;
    char *s = NULL;

    bad += expect(qw22_parse("L[2]*L[1]", QW22_PROFILE_STANDARD, &x) == QW22_STATUS_OK, "parse");
    bad += expect(qw22_element_to_string(x, false, &s) == QW22_STATUS_OK, "to_string");
    bad += expect(strcmp(s, "q^-2 * L[1] L[2] - q^-1 * L[3]") == 0, "normal form text");
    qw22_string_free(s);

    Qw22Tensor *d = NULL;
    bad += expect(qw22_coproduct(x, &d) == QW22_STATUS_OK, "coproduct");
    bad += expect(qw22_tensor_to_string(d, true, &s) == QW22_STATUS_OK, "tensor json");
    bad += expect(strstr(s, "\"slots\"") != NULL, "slots field");
    qw22_string_free(s);
    qw22_tensor_free(d);
    qw22_element_free(x);

    Qw22Element *t = NULL;
    qw22_parse("T^2", QW22_PROFILE_STANDARD, &t);
    bad += expect(qw22_counit(t, false, &s) == QW22_STATUS_OK && strcmp(s, "1") == 0, "counit");
    qw22_string_free(s);
    qw22_element_free(t);

    Qw22Element *e = NULL;
    bad += expect(qw22_parse("L[1", QW22_PROFILE_STANDARD, &e) == QW22_STATUS_PARSE_ERROR, "parse error");
    bad += expect(qw22_last_error() != NULL && strstr(qw22_last_error(), "column 4") != NULL, "error message");
    bad += expect(e == NULL, "no handle on error");

    if (bad == 0) {
        printf("ok\n");
    }
    return bad;
}
