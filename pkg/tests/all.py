# -*- coding: utf-8 -*-

if __name__ == "__main__":
    from anosov_suspension.tests import run_cov_test

    run_cov_test(__file__, "anosov_suspension", is_folder=True, preview=False)
