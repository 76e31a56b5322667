#include <stdio.h>
#include <string.h>

#include "ordsemi.h"

static const char *EXAMPLE =
    "osg v1\n"
    "elements: a e f\n"
    "table:\n"
    "a e f\n"
    "a e f\n"
    "a e f\n"
    "order:\n"
    "a <= e\n"
    "a <= f\n";

int main(void) {
    OsgSemigroup *s = NULL;
    if (osg_parse(EXAMPLE, &s) != OSG_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", osg_last_error());
        return 1;
    }
    size_t n = 0;
    OsgTruth ri = OSG_TRUTH_FALSE;
    if (osg_size(s, &n) != OSG_STATUS_OK || n != 3) return 2;
    if (osg_is_right_inverse(s, &ri) != OSG_STATUS_OK || ri != OSG_TRUTH_TRUE) return 3;

    size_t labels[3];
    if (osg_green_classes(s, "R", labels, 3) != OSG_STATUS_OK) return 4;
    if (labels[0] != 0 || labels[1] != 0 || labels[2] != 0) return 5;

    char *json = NULL;
    if (osg_classify_json(s, &json) != OSG_STATUS_OK) return 6;
    if (strstr(json, "\"right_inverse\"") == NULL) return 7;
    osg_string_free(json);

    OsgSemigroup *bad = NULL;
    if (osg_parse("osg v1\nelements: e f\ntable:\ne f\ne f\norder:\ne <= f\nf <= e\n", &bad) !=
        OSG_STATUS_INVALID_STRUCTURE)
        return 8;
    if (strstr(osg_last_error(), "antisymmetry") == NULL) return 9;

    osg_free(s);
    printf("ok %s\n", osg_version());
    return 0;
}
