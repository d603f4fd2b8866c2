#!/usr/bin/env python3
"""
Test runner for qformlab
"""

import unittest
import sys
import os
import time
from collections import defaultdict

# Add the project root to Python path
sys.path.append(os.path.dirname(__file__))


class DetailedTestResult(unittest.TextTestResult):
    """Records status and wall time of every test for the summary report."""

    def __init__(self, stream, descriptions, verbosity):
        super().__init__(stream, descriptions, verbosity)
        self.test_results = []
        self.start_time = None

    def startTest(self, test):
        self.start_time = time.time()
        super().startTest(test)

    def _record(self, test, status, message=None):
        self.test_results.append({
            'test': test.id(),
            'status': status,
            'duration': time.time() - self.start_time,
            'message': message,
        })

    def addSuccess(self, test):
        self._record(test, 'PASS')
        super().addSuccess(test)

    def addError(self, test, err):
        self._record(test, 'ERROR', str(err[1]))
        super().addError(test, err)

    def addFailure(self, test, err):
        self._record(test, 'FAIL', str(err[1]))
        super().addFailure(test, err)

    def addSkip(self, test, reason):
        self._record(test, 'SKIP', reason)
        super().addSkip(test, reason)


def print_report(result, total_time):
    print("\n" + "=" * 70)
    print("TEST EXECUTION SUMMARY")
    print("=" * 70)

    total_tests = result.testsRun
    total_failures = len(result.failures)
    total_errors = len(result.errors)
    total_skipped = len(result.skipped)
    total_passed = total_tests - total_failures - total_errors - total_skipped

    print(f"Total Tests Run: {total_tests}")
    print(f"Passed: {total_passed}")
    print(f"Failed: {total_failures}")
    print(f"Errors: {total_errors}")
    print(f"Skipped: {total_skipped}")
    print(f"Total Execution Time: {total_time:.3f}s")

    # Per test module, e.g. tests.test_qseries
    by_module = defaultdict(list)
    for entry in result.test_results:
        by_module[entry['test'].rsplit('.', 2)[0]].append(entry)

    print("\n" + "-" * 70)
    print("RESULTS BY MODULE")
    print("-" * 70)
    for module_name in sorted(by_module):
        tests = by_module[module_name]
        passed = sum(1 for t in tests if t['status'] == 'PASS')
        seconds = sum(t['duration'] for t in tests)
        print(f"  {module_name:<32} {passed:>4}/{len(tests):<4} {seconds:8.3f}s")
        for test in tests:
            if test['status'] in ('FAIL', 'ERROR') and test['message']:
                print(f"    x {test['test'].rsplit('.', 1)[-1]}: {test['message'].splitlines()[0]}")

    if result.test_results:
        print("\nSlowest Tests:")
        slowest = sorted(result.test_results, key=lambda t: t['duration'], reverse=True)[:5]
        for i, test in enumerate(slowest, 1):
            print(f"  {i}. {test['test'].rsplit('.', 1)[-1]} ({test['duration']:.3f}s)")

    print("\n" + "=" * 70)


def run_all_tests():
    """Run all test suites and generate a report"""
    print("=" * 70)
    print("QFORMLAB - TEST SUITE")
    print("=" * 70)

    test_suite = unittest.TestLoader().discover('tests', pattern='test_*.py')
    runner = unittest.TextTestRunner(verbosity=2, resultclass=DetailedTestResult, buffer=True)

    start_time = time.time()
    result = runner.run(test_suite)
    print_report(result, time.time() - start_time)
    return result.wasSuccessful()


def run_specific_test(test_name):
    """Run a specific test module"""
    print(f"Running specific test: {test_name}")

    try:
        test_suite = unittest.TestLoader().loadTestsFromName(f'tests.{test_name}')
        result = unittest.TextTestRunner(verbosity=2).run(test_suite)
        return result.wasSuccessful()
    except Exception as e:
        print(f"Error loading test {test_name}: {e}")
        return False


if __name__ == '__main__':
    if len(sys.argv) > 1:
        success = run_specific_test(sys.argv[1])
    else:
        success = run_all_tests()

    sys.exit(0 if success else 1)
