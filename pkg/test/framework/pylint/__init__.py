from test.framework.pylint.lwframes_token_checker import LwframesTokenChecker


def register(linter):
    """
    Register custom lint checkers with pylint, e.g. "pylint --load-plugins=test.framework.pylint app".
    """
    linter.register_checker(LwframesTokenChecker(linter))
