# %% [markdown]
# # Checking the bundled table of knots up to 8 crossings
#
# Each row lists boundary slopes with doubled weights and the A / A-hat degrees.
# Rows are compared up to a global change of sign of the slopes.

# %%
from twobridge.golden import bundled_table_path, read_tsv, verify_rows

rows = read_tsv(bundled_table_path())
for r in verify_rows(rows):
    extra = "; ".join(r.known + r.failures + r.notes)
    print(f"{r.status} {r.row.name:5} K({r.row.alpha},{r.row.beta}) {r.chirality or '-':9} {extra}")

# %%
# The same from the shell:  twobridge verify-table  (and --discover to re-derive alpha, beta)
