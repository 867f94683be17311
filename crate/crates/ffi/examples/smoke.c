/* Build: cargo build --release -p schurlie-ffi
 *        cc crates/ffi/examples/smoke.c -Icrates/ffi/include \
 *           target/release/libschurlie_ffi.a -lpthread -ldl -lm -o smoke */
#include <stdio.h>
#include "schurlie.h"

int main(void) {
    SchurlieLie *a = NULL, *b = NULL, *c = NULL;
    char *text = NULL;
    if (schurlie_lie_parse("[x1,x2]", 2, &a) != SCHURLIE_STATUS_OK ||
        schurlie_lie_parse("x1", 2, &b) != SCHURLIE_STATUS_OK ||
        schurlie_lie_bracket(b, a, &c) != SCHURLIE_STATUS_OK ||
        schurlie_lie_to_string(c, &text) != SCHURLIE_STATUS_OK) {
        fprintf(stderr, "error: %s\n", schurlie_last_error());
        return 1;
    }
    printf("%s\n", text);
    schurlie_string_free(text);

    if (schurlie_bracketing_function("[[,],]", &text) == SCHURLIE_STATUS_OK) {
        printf("%s\n", text);
        schurlie_string_free(text);
    }
    if (schurlie_lie_parse("[x1,x2", 2, &a) == SCHURLIE_STATUS_SYNTAX)
        printf("syntax error: %s\n", schurlie_last_error());

    schurlie_lie_free(a);
    schurlie_lie_free(b);
    schurlie_lie_free(c);
    return 0;
}
