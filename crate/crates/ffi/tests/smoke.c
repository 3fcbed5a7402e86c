#include <stdio.h>
#include <string.h>

#include "deltanu.h"

int main(void) {
    const uint64_t gens[] = {3, 10, 14};
    DeltanuSemigroup *h = NULL;
    if (deltanu_semigroup_new(gens, 3, &h) != DELTANU_STATUS_OK) return 1;

    DeltanuBounds b;
    if (deltanu_bounds(h, &b) != DELTANU_STATUS_OK || b.n0 != 60 || b.delta != 42) return 2;

    uint64_t buf[8];
    size_t len = 0;
    uint64_t evaluated = 0;
    if (deltanu_delta_nu(h, 62, DELTANU_METHOD_CHECK, buf, 8, &len, &evaluated) != DELTANU_STATUS_OK) return 3;
    if (len != 2 || buf[0] != 1 || buf[1] != 3) return 4;

    if (deltanu_delta_nu(h, 62, DELTANU_METHOD_AUTO, buf, 1, &len, NULL) != DELTANU_STATUS_BUFFER_TOO_SMALL || len != 2) return 5;
    if (strlen(deltanu_last_error()) == 0) return 6;

    char *json = NULL;
    if (deltanu_period_report_json(h, 200, 1, &json) != DELTANU_STATUS_OK) return 7;
    int ok = strstr(json, "\"minimal_period\":3") != NULL;
    deltanu_string_free(json);
    deltanu_semigroup_free(h);
    if (!ok) return 8;

    printf("ok\n");
    return 0;
}
