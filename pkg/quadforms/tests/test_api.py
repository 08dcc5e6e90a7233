from django.core.cache import cache
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APITestCase

from quadforms.models import SurveyRun


class FormEndpointTests(APITestCase):
    def setUp(self):
        cache.clear()

    def test_classify(self):
        response = self.client.get(reverse("quadforms:classify"), {"form": "1,-1,-57"})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data["verdict"], "LowerExtraordinary")
        self.assertEqual(response.data["certificate"]["h_plus_pair"], [3, 3])

    def test_classify_missing_form(self):
        response = self.client.get(reverse("quadforms:classify"))
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["error"], "bad_format")

    def test_valequiv(self):
        response = self.client.get(
            reverse("quadforms:valequiv"), {"f": "1,1,-1", "g": "4,2,-1"}
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data["equal"])

    def test_classnum(self):
        response = self.client.get(reverse("quadforms:classnum", args=[-84]))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data["h_plus"], 4)

    def test_classnum_square(self):
        response = self.client.get(reverse("quadforms:classnum", args=[16]))
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["error"], "square_discriminant")

    def test_unit(self):
        response = self.client.get(reverse("quadforms:unit", args=[37]))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual((response.data["x"], response.data["y"]), (5, 2))
        self.assertFalse(response.data["parity_criterion"])

    def test_valueset(self):
        response = self.client.get(
            reverse("quadforms:valueset"), {"form": "1,1,-1", "max": "5"}
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data, [-5, -4, -1, 0, 1, 4, 5])

    def test_valueset_bad_bound(self):
        response = self.client.get(
            reverse("quadforms:valueset"), {"form": "1,1,-1", "max": "many"}
        )
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)

    def test_imagemod(self):
        response = self.client.get(
            reverse("quadforms:imagemod"),
            {"form": "1,0,-8", "m": "32", "restriction": "even-first"},
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data["values"], [0, 4, 8, 16, 24, 28])

    def test_imagemod_precondition(self):
        response = self.client.get(reverse("quadforms:imagemod"), {"form": "1,0,1", "m": "1"})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["error"], "precondition_failed")


class SurveyEndpointTests(APITestCase):
    def setUp(self):
        cache.clear()

    def test_post_records_a_run(self):
        response = self.client.post(reverse("quadforms:surveys"), {"max": 800}, format="json")
        self.assertEqual(response.status_code, status.HTTP_201_CREATED)
        self.assertEqual(SurveyRun.objects.count(), 1)
        self.assertEqual(response.data["run_id"], SurveyRun.objects.get().pk)

    def test_post_requires_bound(self):
        response = self.client.post(reverse("quadforms:surveys"), {}, format="json")
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(SurveyRun.objects.count(), 0)

    def test_recent_surveys(self):
        self.client.post(reverse("quadforms:surveys"), {"max": 300}, format="json")
        self.client.post(reverse("quadforms:surveys"), {"max": 600}, format="json")
        response = self.client.get(reverse("quadforms:surveys"), {"limit": "1"})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data["total"]["runs"], 2)
        self.assertEqual(response.data["total"]["largest_bound"], 600)
        self.assertEqual(len(response.data["runs"]), 1)
        self.assertEqual(sum(response.data["total"]["by_status"].values()), 2)
        listed = response.data["runs"][0]
        run = SurveyRun.objects.get(pk=listed["id"])
        self.assertGreater(run.g58, 0)
        self.assertEqual(listed["eisenstein_share"], run.eisenstein / run.g58)


class HealthTests(APITestCase):
    def test_api_health(self):
        response = self.client.get(reverse("quadforms:api_health"))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data["status"], "healthy")

    def test_liveness(self):
        response = self.client.get(reverse("health_check"))
        self.assertEqual(response.status_code, status.HTTP_200_OK)
