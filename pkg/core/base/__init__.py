from .suite import BaseSuite, Check, CheckResult, SuiteReport

__all__ = ['BaseSuite', 'Check', 'CheckResult', 'SuiteReport']
